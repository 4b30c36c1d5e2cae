#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cgl/central.hpp"
#include "cgl/classgroup.hpp"
#include "cgl/ideals.hpp"

namespace cgl {

/// Parameters of the resonator construction.
///
/// M enters only through log M, since the interesting values of M overflow
/// any floating type. K = floor((log_2 M)^gamma) unless k_blocks overrides it
/// (same interval geometry, more blocks), which is what makes the
/// construction non-empty at testable sizes.
struct ResonatorParams {
  double log_m = 0.0;
  double gamma = 1.0 / 3.0;
  double a_param = 2.5;
  std::optional<int> k_blocks;
  std::size_t size_cap = 1'000'000;

  double log2_m() const;
  double log3_m() const;
  /// log M * log_2 M, the unit of the block intervals.
  double scale() const;
  int block_count() const;
  /// a log M / (k^2 log_3 M): members of the resonator set have strictly
  /// fewer prime factors than this from block k.
  double count_bound(int k) const;

  /// Throws DomainError unless log M > e, 0 < gamma < 1/2, 2 < a < 1/gamma.
  void validate() const;
};

/// The prime ideals above the primes of one block interval
/// (e^k scale, e^{k+1} scale], with their weights f.
struct PrimeBlock {
  int k = 1;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<PrimeIdeal> ideals;
  std::vector<double> f_values;
};

/// f(p) = sqrt(log M log_2 M / log_3 M) / (sqrt(p) (log p - log_2 M - log_3 M)).
/// Depends only on the rational prime, so conjugate ideals share a weight.
double resonator_weight(const ResonatorParams& params, std::int64_t p);

/// Blocks k = 1..K-1. Empty when K <= 1; throws CapacityError when the top
/// of the last interval is beyond the sieve.
std::vector<PrimeBlock> build_blocks(const Discriminant& d, const ResonatorParams& params);

/// A squarefree ideal as sorted positions into the flattened prime ideal
/// list (blocks in order, ideals within a block in order).
struct IdealDescriptor {
  std::vector<std::uint32_t> primes;
  friend bool operator==(const IdealDescriptor&, const IdealDescriptor&) = default;
};

/// Prime ideals of all blocks laid out in flattened order.
struct FlatPrimes {
  std::vector<std::int64_t> p;
  std::vector<std::int64_t> norm;
  std::vector<double> f;
  std::vector<int> block;  ///< position of the owning block
  std::vector<const PrimeIdeal*> ideal;
};

FlatPrimes flatten(const std::vector<PrimeBlock>& blocks);

/// Natural log of the number of squarefree products satisfying the per-block
/// bounds (bounds[i] applies to blocks[i]).
double log_m_set_size(const std::vector<PrimeBlock>& blocks, std::span<const double> bounds);

/// Every squarefree product of distinct prime ideals with strictly fewer than
/// bounds[i] factors from blocks[i], in depth-first order starting with the
/// unit ideal. Throws SizeCapExceeded (carrying the log of the size) when the set
/// would hold more than size_cap members.
std::vector<IdealDescriptor> enumerate_m_set(const std::vector<PrimeBlock>& blocks, std::span<const double> bounds,
                                             std::size_t size_cap);
std::vector<IdealDescriptor> enumerate_m_set(const std::vector<PrimeBlock>& blocks, const ResonatorParams& params);

/// Resonator coefficients r(A) = sqrt(sum_{a in M, [a] = A} f(a)^2), indexed
/// like g.classes(), and R_chi = sum_A chi(A) r(A), indexed like characters.
struct ResonatorCoefficients {
  Eigen::VectorXd r;
  Eigen::VectorXcd r_chi;
};

ResonatorCoefficients resonator_coeffs(const GroupStructure& g, const std::vector<IdealDescriptor>& m_set,
                                       const std::vector<PrimeBlock>& blocks);

/// R_chi = sum_A chi(A) r(A) for arbitrary nonnegative class weights.
Eigen::VectorXcd character_transform(const GroupStructure& g, const Eigen::VectorXd& r);

/// V = sum_{chi != chi_0} L(1/2, chi) |R_chi|^2 and W = sum_{chi != chi_0} |R_chi|^2.
struct ResonanceRatio {
  double v = 0.0;
  double w = 0.0;
  double ratio() const { return w > 0.0 ? v / w : std::numeric_limits<double>::quiet_NaN(); }
};

/// `l_values[k]` is L(1/2, chi_k) for k >= 1 (entry 0 ignored); r_chi is
/// indexed the same way. Accepts arbitrary complex R_chi.
ResonanceRatio resonance_ratio(std::span<const double> l_values, const Eigen::VectorXcd& r_chi);

struct ResonanceQuantities {
  double v = 0.0;
  double w = 0.0;
  double v0 = 0.0;  ///< V + E_0
  double w0 = 0.0;  ///< h sum_A r(A)^2
  double e0 = 0.0;  ///< 2 S(D) |R_{chi_0}|^2
  /// sum over all chi, trivial included, of the AFE sum times |R_chi|^2:
  /// an independent route to V_0.
  double v0_all_characters = 0.0;
};

ResonanceQuantities quantities(const GroupStructure& g, const ResonatorCoefficients& coeffs, const AfeSums& sums,
                               const MajorantSum& majorant);

/// sum over m | n, both in m_set, with N(n/m) <= norm_cutoff of
/// f(m) f(n) / sqrt(N(n/m)). When smoothing_d is set each term also carries
/// W(2 pi N(n/m) / sqrt(D)).
double divisor_pair_sum(const std::vector<PrimeBlock>& blocks, const std::vector<IdealDescriptor>& m_set,
                        double norm_cutoff = std::numeric_limits<double>::infinity(),
                        std::optional<std::int64_t> smoothing_d = std::nullopt);

/// D^{-1/8} sum_{n in m_set} f(n)^2 prod_{p | n} (1 + 1 / (f(p) N(p)^{1/4})),
/// which dominates the pairs of divisor_pair_sum with N(n/m) > sqrt(D).
double truncation_majorant(const std::vector<PrimeBlock>& blocks, const std::vector<IdealDescriptor>& m_set,
                           std::int64_t d);

/// sum_{n in m_set} f(n)^2.
double f_square_sum(const std::vector<PrimeBlock>& blocks, const std::vector<IdealDescriptor>& m_set);

/// prod_p (1 + f(p) / (sqrt(N p) (1 + f(p)^2))), accumulated in log space.
double euler_ratio(const std::vector<PrimeBlock>& blocks);
double log_euler_ratio(const std::vector<PrimeBlock>& blocks);

/// sqrt(log M log_2 M / log_3 M) * sum_p 1 / (sqrt(N p) sqrt(p) (log p - log_2 M - log_3 M)).
double theorem2_exponent(const std::vector<PrimeBlock>& blocks, const ResonatorParams& params);

/// A complete resonator for one discriminant.
struct ResonatorInstance {
  ResonatorParams params;
  double t_cut = kDefaultTCut;
  std::vector<PrimeBlock> blocks;
  std::vector<IdealDescriptor> m_set;
  ResonatorCoefficients coeffs;
  ResonanceQuantities q;
  MajorantSum majorant;
  /// L(1/2, chi_k) for k >= 1; entry 0 holds the AFE sum of chi_0.
  std::vector<double> l_values;
  bool degenerate = false;  ///< K <= 1: no blocks, resonator is the unit ideal
};

ResonatorInstance build_instance(const GroupStructure& g, const ResonatorParams& params, const AfeSums& sums);
/// Same, over caller-supplied blocks (e.g. a truncated prime set).
ResonatorInstance build_instance(const GroupStructure& g, const ResonatorParams& params,
                                 std::vector<PrimeBlock> blocks, const AfeSums& sums);

struct ConstraintReport {
  std::size_t m_size = 0;
  double size_bound = 0.0;  ///< h / (3 D^{1/4} log D)
  bool size_bound_ok = false;
  double tcc_ratio = 0.0;  ///< E_0 / V_0; the constraint asks for < 1
  bool tcc_ok = false;
  double e0_over_w0 = 0.0;
  bool surrogate_ok = false;  ///< E_0 <= W_0
  /// E_0 with S(D) replaced by the divisor-function majorant.
  double e0_divisor_majorant = 0.0;
  bool v0_ge_w0 = false;
  double v_over_w = 0.0;
  bool w_positive = false;
  double m_d = 0.0;  ///< max over nontrivial chi; 0 when h = 1
  /// W > 0 and max_chi L(1/2, chi) >= V/W up to 1e-6.
  bool certified = false;
  std::size_t ramified_ideals = 0;
  double ramified_exponent_share = 0.0;
};

ConstraintReport check_constraints(const GroupStructure& g, const ResonatorInstance& inst);

}  // namespace cgl
