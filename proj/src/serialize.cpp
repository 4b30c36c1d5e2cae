#include "cgl/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace cgl {

namespace {

std::string opt(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string cyclic_name(const std::vector<std::int64_t>& orders) {
  if (orders.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) s += " x ";
    s += "C" + std::to_string(orders[i]);
  }
  return s;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string family_csv_header() { return "D,h,M_D,argmax_char,v_over_w,status"; }

std::string family_csv_row(const FamilyRow& row) {
  std::ostringstream out;
  out << row.d << ',' << row.h << ',' << format_double(row.m_d) << ',';
  if (row.argmax_char) out << *row.argmax_char;
  out << ',' << opt(row.v_over_w) << ',' << row.status;
  return out.str();
}

std::string to_csv(const ClassGroupReport& rep) {
  std::ostringstream out;
  out << "D,h,cyclic_orders,a,b,c\n";
  std::string orders;
  for (std::size_t i = 0; i < rep.cyclic_orders.size(); ++i) {
    if (i) orders += ' ';
    orders += std::to_string(rep.cyclic_orders[i]);
  }
  for (const auto& f : rep.forms) {
    out << rep.d << ',' << rep.h << ',' << orders << ',' << f[0] << ',' << f[1] << ',' << f[2] << '\n';
  }
  return out.str();
}

std::string to_csv(const LValueReport& rep) {
  std::ostringstream out;
  out << "D,index,value,imag_part,trunc_error,n_max\n";
  for (const auto& r : rep.rows) {
    out << rep.d << ',' << r.index << ',' << format_double(r.value) << ',' << format_double(r.imag_part) << ','
        << format_double(r.trunc_error) << ',' << r.n_max << '\n';
  }
  return out.str();
}

std::string to_csv(const ResonateReport& rep) {
  std::ostringstream out;
  out << "D,h,status,m_size,v,w,v_over_w,v0,w0,e0,tcc_ratio,size_bound_ok,theorem2_exponent,M_D,certified\n";
  out << rep.d << ',' << rep.h << ',' << rep.status << ',';
  if (const auto& q = rep.quantities) {
    out << q->m_size << ',' << format_double(q->v) << ',' << format_double(q->w) << ',' << opt(q->v_over_w) << ','
        << format_double(q->v0) << ',' << format_double(q->w0) << ',' << format_double(q->e0) << ','
        << opt(q->tcc_ratio) << ',' << (q->size_bound_ok ? 1 : 0) << ',';
  } else {
    out << ",,,,,,,,,";
  }
  out << format_double(rep.theorem2_exponent) << ',' << opt(rep.m_d) << ','
      << (rep.quantities && rep.quantities->certified ? 1 : 0) << '\n';
  return out.str();
}

std::string to_text(const ClassGroupReport& rep) {
  std::ostringstream out;
  out << "D = " << rep.d << "\nh = " << rep.h << "\nstructure: " << cyclic_name(rep.cyclic_orders)
      << "\nreduced forms:\n";
  for (const auto& f : rep.forms) out << "  (" << f[0] << ", " << f[1] << ", " << f[2] << ")\n";
  return out.str();
}

std::string to_text(const LValueReport& rep) {
  std::ostringstream out;
  out << "D = " << rep.d << ", h = " << rep.h << ", t_cut = " << format_double(rep.t_cut) << '\n';
  out << "index  L(1/2, chi)  trunc_error\n";
  for (const auto& r : rep.rows) {
    out << r.index << "  " << format_double(r.value) << "  " << format_double(r.trunc_error) << '\n';
  }
  return out.str();
}

std::string to_text(const ResonateReport& rep) {
  std::ostringstream out;
  out << "D = " << rep.d << ", h = " << rep.h << "\n";
  out << "log M = " << format_double(rep.log_m) << ", gamma = " << format_double(rep.gamma)
      << ", a = " << format_double(rep.a_param) << ", K = " << rep.block_count
      << (rep.k_blocks ? " (override)" : " (auto)") << "\n";
  out << "blocks:\n";
  if (rep.blocks.empty()) out << "  none\n";
  for (const auto& b : rep.blocks) {
    out << "  k = " << b.k << ": (" << format_double(b.lo) << ", " << format_double(b.hi) << "], " << b.primes
        << " primes, " << b.ideals << " prime ideals (" << b.split << " split, " << b.inert << " inert, " << b.ramified
        << " ramified)\n";
  }
  out << "status: " << rep.status << "\n";
  if (rep.status == "empty_prime_set") out << "warning: empty prime set, the resonator is the unit ideal\n";
  if (rep.log_m_set_size) {
    out << "|M| = e^" << format_double(*rep.log_m_set_size) << " exceeds size_cap " << rep.size_cap
        << "; quantities not computed\n";
  }
  if (const auto& q = rep.quantities) {
    out << "|M| = " << q->m_size << "\n";
    out << "V = " << format_double(q->v) << "\nW = " << format_double(q->w) << "\n";
    out << "V/W = " << (q->v_over_w ? format_double(*q->v_over_w) : std::string("undefined (W = 0)")) << "\n";
    out << "V0 = " << format_double(q->v0) << "\nW0 = " << format_double(q->w0) << "\nE0 = " << format_double(q->e0)
        << "\n";
    out << "E0 with divisor majorant = " << format_double(q->e0_divisor_majorant) << "\n";
    out << "TCC ratio E0/V0 = " << (q->tcc_ratio ? format_double(*q->tcc_ratio) : std::string("undefined"))
        << (q->tcc_ok ? " (< 1)" : " (>= 1, flagged)") << "\n";
    out << "E0/W0 = " << (q->e0_over_w0 ? format_double(*q->e0_over_w0) : std::string("undefined"))
        << ", E0 <= W0: " << yes_no(q->surrogate_ok) << "\n";
    out << "size bound h/(3 D^(1/4) log D) = " << format_double(q->size_bound) << ", |M| within: "
        << yes_no(q->size_bound_ok) << "\n";
    out << "V0 >= W0: " << yes_no(q->v0_ge_w0) << "\n";
    out << "ramified prime ideals: " << q->ramified_ideals << ", exponent share "
        << format_double(q->ramified_exponent_share) << "\n";
  }
  out << "Euler ratio = " << format_double(rep.euler_ratio) << "\n";
  out << "lower-bound exponent = " << format_double(rep.theorem2_exponent)
      << ", exp = " << format_double(rep.exp_theorem2_exponent) << "\n";
  out << "M_D = " << (rep.m_d ? format_double(*rep.m_d) : std::string("undefined (h = 1)")) << "\n";
  if (rep.quantities && rep.quantities->v_over_w) {
    out << "max L >= V/W: " << (rep.quantities->certified ? "certified" : "FAILED") << "\n";
  }
  return out.str();
}

std::string to_text(const VerifyReport& rep) {
  std::ostringstream out;
  for (const auto& r : rep.results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << '\n';
  }
  out << "suite " << rep.suite << ": " << (rep.passed ? "all passed" : "FAILURES") << '\n';
  return out.str();
}

json family_summary(const FamilyReport& rep) {
  json j = rep;
  j.erase("rows");
  return j;
}

}  // namespace cgl
