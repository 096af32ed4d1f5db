#ifndef BLOCKSEP_TOOLS_COMMANDS_HPP
#define BLOCKSEP_TOOLS_COMMANDS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "blocksep/blocksep.hpp"

namespace blocksep::cli {

enum class Method { matrix, recurrence, symmetric, bruteforce, all };
enum class Format { plain, csv, json, bfile };

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
  std::size_t limit = 10;
  Method method = Method::matrix;
  Format format = Format::plain;
  std::optional<std::size_t> cap_enum;  // overrides the cap of the command's enumeration
  std::optional<std::string> output;    // handled by main; commands write to a stream
  bool parallel = false;
  bool inject_fault = false;            // verify only: corrupt one coefficient
};

inline const char* method_name(Method m) {
  switch (m) {
    case Method::matrix: return "matrix";
    case Method::recurrence: return "recurrence";
    case Method::symmetric: return "symmetric";
    case Method::bruteforce: return "bruteforce";
    case Method::all: return "all";
  }
  return "?";
}

using Sequence = std::vector<Integer>;
using json = nlohmann::ordered_json;

struct Check {
  std::string name;
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool passed = true;
  std::string detail;
};

namespace detail {

inline Sequence to_sequence(const TruncatedSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

inline json strings(const Sequence& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline json check_json(const Check& c) {
  return json{{"name", c.name}, {"range", {c.lo, c.hi}}, {"passed", c.passed}, {"detail", c.detail}};
}

inline json checks_json(const std::vector<Check>& checks) {
  json a = json::array();
  for (const auto& c : checks) a.push_back(check_json(c));
  return a;
}

inline json envelope(std::size_t n, const std::string& method, json values,
                     const std::vector<Check>& checks) {
  return json{{"n", n}, {"values", std::move(values)}, {"method", method},
              {"checks", checks_json(checks)}};
}

/// First index where the two sequences differ over [0, upto], or nullopt.
inline std::optional<std::size_t> first_difference(const Sequence& a, const Sequence& b,
                                                   std::size_t upto) {
  for (std::size_t n = 0; n <= upto; ++n) {
    if (n >= a.size() || n >= b.size() || a[n] != b[n]) return n;
  }
  return std::nullopt;
}

inline Check compare(std::string name, const Sequence& a, const char* a_name, const Sequence& b,
                     const char* b_name, std::size_t upto) {
  Check c{std::move(name), 0, upto, true, ""};
  if (auto d = first_difference(a, b, upto)) {
    c.passed = false;
    std::ostringstream os;
    os << "first difference at n=" << *d << ": " << a_name << '='
       << (*d < a.size() ? a[*d].str() : "?") << ", " << b_name << '='
       << (*d < b.size() ? b[*d].str() : "?");
    c.detail = os.str();
  }
  return c;
}

inline bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

inline void print_checks_plain(std::ostream& out, const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " n=" << c.lo << ".." << c.hi;
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
}

inline EnumerationLimits limits_for(const RunConfig& cfg) {
  EnumerationLimits lim;
  if (cfg.cap_enum) {
    lim.partition_cap = *cfg.cap_enum;
    lim.listing_cap = *cfg.cap_enum;
    lim.oracle_cap = *cfg.cap_enum;
    lim.decoration_cap = *cfg.cap_enum;
  }
  return lim;
}

inline Sequence bruteforce_sequence(std::size_t upto, const EnumerationLimits& lim) {
  Sequence v;
  for (std::size_t n = 0; n <= upto; ++n) v.push_back(count_block_separated(n, lim));
  return v;
}

struct AnalyticRoutes {
  Sequence matrix, recurrence, symmetric;
};

inline AnalyticRoutes analytic_routes(std::size_t order, bool parallel) {
  if (!parallel) {
    return {to_sequence(matrix_product_gf(order)), to_sequence(euler_factorized_gf(order)),
            to_sequence(fibonacci_weighted_gf(order))};
  }
  auto m = std::async(std::launch::async, [=] { return to_sequence(matrix_product_gf(order)); });
  auto r = std::async(std::launch::async, [=] { return to_sequence(euler_factorized_gf(order)); });
  auto s = std::async(std::launch::async, [=] { return to_sequence(fibonacci_weighted_gf(order)); });
  return {m.get(), r.get(), s.get()};
}

}  // namespace detail

/// b(0..limit) by the configured method. For Method::all every applicable
/// method is run and compared; bruteforce covers n <= min(limit, cap).
struct SequenceResult {
  Sequence values;
  std::vector<Check> checks;
};

inline SequenceResult compute_sequence(const RunConfig& cfg) {
  const std::size_t n = cfg.limit;
  const EnumerationLimits lim = detail::limits_for(cfg);
  switch (cfg.method) {
    case Method::matrix: return {detail::to_sequence(matrix_product_gf(n)), {}};
    case Method::recurrence: return {detail::to_sequence(euler_factorized_gf(n)), {}};
    case Method::symmetric: return {detail::to_sequence(fibonacci_weighted_gf(n)), {}};
    case Method::bruteforce: return {detail::bruteforce_sequence(n, lim), {}};
    case Method::all: break;
  }
  auto routes = detail::analytic_routes(n, cfg.parallel);
  std::vector<Check> checks;
  checks.push_back(detail::compare("matrix_vs_recurrence", routes.matrix, "matrix",
                                   routes.recurrence, "recurrence", n));
  checks.push_back(detail::compare("matrix_vs_symmetric", routes.matrix, "matrix",
                                   routes.symmetric, "symmetric", n));
  const std::size_t brute_hi = std::min(n, lim.partition_cap);
  checks.push_back(detail::compare("matrix_vs_bruteforce", routes.matrix, "matrix",
                                   detail::bruteforce_sequence(brute_hi, lim), "bruteforce",
                                   brute_hi));
  return {std::move(routes.matrix), std::move(checks)};
}

inline int cmd_seq(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SequenceResult res = compute_sequence(cfg);
  if (!detail::all_passed(res.checks)) {
    err << "method disagreement:\n";
    for (const auto& c : res.checks)
      if (!c.passed) err << "  " << c.name << ": " << c.detail << '\n';
    return exit_check_failed;
  }
  const auto& v = res.values;
  switch (cfg.format) {
    case Format::plain:
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
      out << '\n';
      break;
    case Format::csv:
      out << "n,b\n";
      for (std::size_t i = 0; i < v.size(); ++i) out << i << ',' << v[i] << '\n';
      break;
    case Format::bfile:
      for (std::size_t i = 0; i < v.size(); ++i) out << i << ' ' << v[i] << '\n';
      break;
    case Format::json:
      out << detail::envelope(cfg.limit, method_name(cfg.method), detail::strings(v), res.checks)
                 .dump(2)
          << '\n';
      break;
  }
  return exit_ok;
}

/// Strict sandwich p(n) < b(n) < p̄(n) for n >= 1, equality at n = 0.
inline Check sandwich_check(const Sequence& p, const Sequence& b, const Sequence& pbar,
                            std::size_t upto) {
  Check c{"sandwich", 0, upto, true, ""};
  for (std::size_t n = 0; n <= upto; ++n) {
    const bool ok = n == 0 ? (p[0] == 1 && b[0] == 1 && pbar[0] == 1)
                           : (p[n] <= b[n] && b[n] <= pbar[n]);
    if (!ok) {
      c.passed = false;
      c.detail = "violated at n=" + std::to_string(n) + ": p=" + p[n].str() + ", b=" + b[n].str() +
                 ", pbar=" + pbar[n].str();
      break;
    }
  }
  return c;
}

inline int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == Format::bfile) {
    err << "table: bfile format is only available for seq\n";
    return exit_usage;
  }
  SequenceResult res = compute_sequence(cfg);
  if (!detail::all_passed(res.checks)) {
    err << "method disagreement:\n";
    detail::print_checks_plain(err, res.checks);
    return exit_check_failed;
  }
  const std::size_t n = cfg.limit;
  const Sequence p = detail::to_sequence(euler_inverse(n));
  const Sequence pbar = detail::to_sequence(overpartition_product(n));
  const Sequence& b = res.values;
  res.checks.push_back(sandwich_check(p, b, pbar, n));

  const std::vector<std::pair<std::string, const Sequence*>> rows = {
      {"p", &p}, {"pbar", &pbar}, {"b", &b}};
  switch (cfg.format) {
    case Format::plain: {
      std::size_t width = std::to_string(n).size();
      for (const auto& [_, row] : rows)
        for (const auto& x : *row) width = std::max(width, x.str().size());
      out << std::left << std::setw(7) << "n" << std::right;
      for (std::size_t i = 0; i <= n; ++i) out << ' ' << std::setw(static_cast<int>(width)) << i;
      out << '\n';
      for (const auto& [name, row] : rows) {
        out << std::left << std::setw(7) << (name + "(n)") << std::right;
        for (const auto& x : *row) out << ' ' << std::setw(static_cast<int>(width)) << x.str();
        out << '\n';
      }
      break;
    }
    case Format::csv:
      out << "n";
      for (std::size_t i = 0; i <= n; ++i) out << ',' << i;
      out << '\n';
      for (const auto& [name, row] : rows) {
        out << name;
        for (const auto& x : *row) out << ',' << x;
        out << '\n';
      }
      break;
    case Format::json: {
      json values{{"p", detail::strings(p)}, {"pbar", detail::strings(pbar)},
                  {"b", detail::strings(b)}};
      out << detail::envelope(n, method_name(cfg.method), std::move(values), res.checks).dump(2)
          << '\n';
      break;
    }
    case Format::bfile: break;
  }
  if (!detail::all_passed(res.checks)) {
    detail::print_checks_plain(err, res.checks);
    return exit_check_failed;
  }
  return exit_ok;
}

/// The invariant suite behind `verify`: analytic routes against each other,
/// against brute force up to the caps, specializations, and the sandwich.
inline std::vector<Check> run_verification(const RunConfig& cfg, Sequence* b_out = nullptr) {
  const std::size_t n = cfg.limit;
  const EnumerationLimits lim = detail::limits_for(cfg);
  using detail::compare;
  using detail::to_sequence;
  std::vector<Check> checks;

  auto routes = detail::analytic_routes(n, cfg.parallel);
  if (cfg.inject_fault) routes.matrix[n] += 1;

  checks.push_back(compare("matrix_vs_recurrence", routes.matrix, "matrix", routes.recurrence,
                           "recurrence", n));
  checks.push_back(compare("matrix_vs_symmetric", routes.matrix, "matrix", routes.symmetric,
                           "symmetric", n));
  const Sequence& b = routes.recurrence;

  checks.push_back(compare("euler_inverse_routes", to_sequence(euler_inverse_product(n)), "product",
                           to_sequence(euler_inverse_pentagonal(n)), "pentagonal", n));

  const std::size_t cutoff_order = std::min<std::size_t>(n, 100);
  checks.push_back(compare(
      "truncation_cutoff", to_sequence(matrix_product_gf(cutoff_order)), "j<=N",
      to_sequence(transfer_product(StatePair::start(cutoff_order), 2 * cutoff_order).total()),
      "j<=2N", cutoff_order));

  const std::size_t brute_hi = std::min(n, lim.partition_cap);
  checks.push_back(compare("oracle_weighted", routes.matrix, "matrix",
                           detail::bruteforce_sequence(brute_hi, lim), "bruteforce", brute_hi));

  const std::size_t oracle_hi = std::min(n, lim.oracle_cap);
  Sequence explicit_counts;
  for (std::size_t k = 0; k <= oracle_hi; ++k)
    explicit_counts.push_back(count_block_separated_explicit(k, lim));
  checks.push_back(
      compare("oracle_explicit", routes.matrix, "matrix", explicit_counts, "explicit", oracle_hi));

  const Sequence p = to_sequence(euler_inverse(n));
  const Sequence pbar = to_sequence(overpartition_product(n));
  checks.push_back(compare("weight_one_is_partitions",
                           to_sequence(weighted_gf(n, [](std::size_t) { return Integer(1); })),
                           "weighted", p, "euler_inverse", n));
  checks.push_back(compare("weight_pow2_is_overpartitions",
                           to_sequence(weighted_gf(n, [](std::size_t r) { return Integer(1) << r; })),
                           "weighted", pbar, "product", n));

  const BivariateTriangle tri = bivariate_gf(n);
  Sequence row_sums;
  for (std::size_t k = 0; k <= n; ++k) row_sums.push_back(tri.row_sum(k));
  checks.push_back(compare("bivariate_row_sums", row_sums, "bivariate", b, "b", n));
  checks.push_back(compare("bivariate_column_zero", tri.column(0), "bivariate", p, "p", n));
  {
    Check c{"bivariate_oracle", 0, oracle_hi, true, ""};
    for (std::size_t k = 0; k <= oracle_hi && c.passed; ++k) {
      BivariateTriangle one(0, {count_bivariate_oracle(k, lim)});
      if (one.row(0) != tri.row(k)) {
        c.passed = false;
        c.detail = "row n=" + std::to_string(k) + " differs";
      }
    }
    checks.push_back(c);
  }

  checks.push_back(sandwich_check(p, routes.matrix, pbar, n));

  {
    const std::size_t r_hi = std::min<std::size_t>(20, lim.decoration_cap);
    Check c{"decorations_count", 0, r_hi, true, ""};
    for (std::size_t r = 0; r <= r_hi && c.passed; ++r) {
      if (Integer(enumerate_decorations(r, lim.decoration_cap).size()) != fib(r + 2) ||
          tiling_count(r) != fib(r + 2)) {
        c.passed = false;
        c.detail = "mismatch at r=" + std::to_string(r);
      }
    }
    checks.push_back(c);
  }
  {
    Check c{"independent_set_binomial_sum", 0, 64, true, ""};
    for (std::size_t r = 0; r <= 64 && c.passed; ++r) {
      if (fib_polynomial(r).evaluate(1) != fib(r + 2)) {
        c.passed = false;
        c.detail = "mismatch at r=" + std::to_string(r);
      }
    }
    checks.push_back(c);
  }

  if (b_out) *b_out = routes.matrix;
  return checks;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Sequence b;
  const auto checks = run_verification(cfg, &b);
  const bool ok = detail::all_passed(checks);
  if (cfg.format == Format::json) {
    out << detail::envelope(cfg.limit, "verify", detail::strings(b), checks).dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << "check,lo,hi,passed,detail\n";
    for (const auto& c : checks)
      out << c.name << ',' << c.lo << ',' << c.hi << ',' << (c.passed ? "true" : "false") << ",\""
          << c.detail << "\"\n";
  } else {
    detail::print_checks_plain(out, checks);
    const auto failed = std::count_if(checks.begin(), checks.end(),
                                      [](const Check& c) { return !c.passed; });
    if (ok)
      out << "all " << checks.size() << " checks passed\n";
    else
      out << failed << " of " << checks.size() << " checks failed\n";
  }
  return ok ? exit_ok : exit_check_failed;
}

inline int cmd_decorations(const RunConfig& cfg, std::size_t r, std::ostream& out, std::ostream&) {
  const EnumerationLimits lim = detail::limits_for(cfg);
  const auto words = enumerate_decorations(r, lim.decoration_cap);
  auto set_text = [](const std::vector<std::size_t>& s, char sep) {
    std::string t;
    for (std::size_t i = 0; i < s.size(); ++i) t += (i ? std::string(1, sep) : "") + std::to_string(s[i]);
    return t;
  };
  std::vector<Check> checks{{"count_is_fibonacci", r, r, Integer(words.size()) == fib(r + 2), ""}};
  switch (cfg.format) {
    case Format::plain:
      for (const auto& w : words) {
        out << (w.size() ? w.str() : "-") << "  {" << set_text(word_to_independent_set(w), ',')
            << "}  " << tiling_str(word_to_tiling(w)) << '\n';
      }
      out << "count " << words.size() << '\n';
      break;
    case Format::csv:
      out << "word,independent_set,tiling\n";
      for (const auto& w : words)
        out << w.str() << ',' << set_text(word_to_independent_set(w), ';') << ','
            << tiling_str(word_to_tiling(w)) << '\n';
      break;
    case Format::json: {
      json values = json::array();
      for (const auto& w : words) {
        json tiles = json::array();
        for (Tile t : word_to_tiling(w))
          tiles.push_back(t == Tile::plain ? "plain" : "overlined_pair");
        values.push_back(json{{"word", w.str()},
                              {"independent_set", word_to_independent_set(w)},
                              {"tiling", std::move(tiles)}});
      }
      out << detail::envelope(r, "decorations", std::move(values), checks).dump(2) << '\n';
      break;
    }
    case Format::bfile: break;
  }
  return detail::all_passed(checks) ? exit_ok : exit_check_failed;
}

inline int cmd_bivariate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::size_t n = cfg.limit;
  const BivariateTriangle tri = bivariate_gf(n);
  const SequenceResult seq = compute_sequence(cfg);
  std::vector<Check> checks = seq.checks;
  Sequence row_sums;
  for (std::size_t k = 0; k <= n; ++k) row_sums.push_back(tri.row_sum(k));
  checks.push_back(detail::compare("row_sums_match_seq", row_sums, "bivariate", seq.values,
                                   method_name(cfg.method), n));
  checks.push_back(detail::compare("column_zero_is_partitions", tri.column(0), "bivariate",
                                   detail::to_sequence(euler_inverse(n)), "p", n));
  switch (cfg.format) {
    case Format::plain:
      for (std::size_t k = 0; k <= n; ++k) {
        out << k << ':';
        for (const auto& x : tri.row(k)) out << ' ' << x;
        out << '\n';
      }
      break;
    case Format::csv:
      out << "n,m,count\n";
      for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t m = 0; m < tri.row(k).size(); ++m)
          out << k << ',' << m << ',' << tri.row(k)[m] << '\n';
      break;
    case Format::json: {
      json values = json::array();
      for (std::size_t k = 0; k <= n; ++k) values.push_back(detail::strings(tri.row(k)));
      out << detail::envelope(n, "bivariate", std::move(values), checks).dump(2) << '\n';
      break;
    }
    case Format::bfile: break;
  }
  if (!detail::all_passed(checks)) {
    detail::print_checks_plain(err, checks);
    return exit_check_failed;
  }
  return exit_ok;
}

inline int cmd_list(const RunConfig& cfg, std::size_t n, std::ostream& out, std::ostream&) {
  const EnumerationLimits lim = detail::limits_for(cfg);
  const auto objects = list_block_separated(n, lim);
  switch (cfg.format) {
    case Format::plain:
      for (const auto& o : objects) out << o.str() << '\n';
      out << "count " << objects.size() << '\n';
      break;
    case Format::csv:
      out << "index,overpartition,skeleton,decoration\n";
      for (std::size_t i = 0; i < objects.size(); ++i)
        out << i << ',' << objects[i].str() << ',' << objects[i].skeleton().str() << ','
            << objects[i].decoration().str() << '\n';
      break;
    case Format::json: {
      json values = json::array();
      for (const auto& o : objects) {
        json blocks = json::array();
        const auto& bl = o.skeleton().blocks();
        for (std::size_t i = 0; i < bl.size(); ++i)
          blocks.push_back(json{{"part", bl[i].part},
                                {"multiplicity", bl[i].multiplicity},
                                {"overlined", o.decoration().overlined(i)}});
        values.push_back(json{{"text", o.str()}, {"blocks", std::move(blocks)}});
      }
      std::vector<Check> checks{
          {"count_matches_weighted", n, n, Integer(objects.size()) == count_block_separated(n, lim),
           ""}};
      out << detail::envelope(n, "list", std::move(values), checks).dump(2) << '\n';
      break;
    }
    case Format::bfile: break;
  }
  return exit_ok;
}

}  // namespace blocksep::cli

#endif  // BLOCKSEP_TOOLS_COMMANDS_HPP
