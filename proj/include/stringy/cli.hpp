#pragma once

/**
 * @file cli.hpp
 * @brief Command dispatch for the stringy_mckay front end.
 *
 * run() never throws for bad input: diagnostics go to `err` with exit status
 * kDiagnostic. Inequalities and invariant failures give kUnequal.
 */

#include "stringy/selftest.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <vector>

namespace stringy::cli {

inline constexpr int kOk = 0;
inline constexpr int kUnequal = 1;
inline constexpr int kDiagnostic = 2;

enum class Format { kTable, kKv };

struct Options {
  Format format = Format::kTable;
  bool allow_fractional = false;
  std::size_t cap = kDefaultGroupCap;
};

struct RunResult {
  int status = kOk;
  std::string out;
  std::string err;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"sectors", "stringy", "resolve", "verify", "compare", "catalog", "selftest"};
  return names;
}

/// Default cap, overridden by STRINGY_MCKAY_CAP when it holds a positive integer.
inline std::size_t default_cap() {
  if (const char* env = std::getenv("STRINGY_MCKAY_CAP")) {
    try {
      BigInt v = parse_integer(env);
      if (v > 0 && v <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::size_t>(v);
    } catch (const Error&) {
    }
  }
  return kDefaultGroupCap;
}

/// A source of model text: a file name for diagnostics plus its content.
struct Source {
  std::string name;
  std::string text;
};

inline Source read_source(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return {path, ss.str()};
}

namespace detail {

inline std::string fractional_note(const MotivicClass& e) {
  for (const auto& [pq, c] : e.terms())
    if (!is_integer(pq.p) || !is_integer(pq.q)) {
      const Rational& f = is_integer(pq.p) ? pq.q : pq.p;
      return "non-integral exponent " + to_string(f) + " (the model is not SL/Gorenstein)";
    }
  return {};
}

inline RunResult diagnostic(const std::string& msg) { return {kDiagnostic, "", "error: " + msg + "\n"}; }

inline ParsedModel parse_source(const Source& s, const Options& o) {
  try {
    return parse_model(s.text, {o.cap});
  } catch (const Error& e) {
    throw Error(s.name + ": " + e.what());
  }
}

inline std::string render_sectors_kv(const std::vector<Sector>& sectors) {
  std::ostringstream os;
  for (const auto& s : sectors)
    os << "sector = " << s.label << "; E = " << s.fixed_epoly.render() << "; shift = " << to_string(s.shift) << "\n";
  return os.str();
}

inline RunResult fractional_gate(const MotivicClass& e, const Options& o, RunResult r) {
  auto note = fractional_note(e);
  if (note.empty()) return r;
  if (!o.allow_fractional) return {kDiagnostic, "", "error: " + note + "; pass --allow-fractional to accept\n"};
  r.out += "note = " + note + "\n";
  return r;
}

inline RunResult cmd_sectors(const Source& s, const Options& o) {
  auto m = parse_source(s, o);
  auto secs = sectors(m.model);
  RunResult r;
  r.out = o.format == Format::kKv ? render_sectors_kv(secs) : render_sector_table(secs);
  return r;
}

inline RunResult cmd_stringy(const Source& s, const Options& o) {
  auto m = parse_source(s, o);
  auto e = orbifold_epoly(m.model);
  RunResult r;
  r.out = "eorb = " + e.render() + "\nchi_orb = " + e.euler_characteristic().str() + "\n";
  return fractional_gate(e, o, std::move(r));
}

inline RunResult cmd_resolve(const Source& s, const Options& o) {
  auto m = parse_source(s, o);
  auto fan = toric_fan_of(m.model);
  if (!fan) return diagnostic(s.name + ": model has no toric fan (non-diagonal group)");
  if (fan->rank() > 3) return diagnostic(s.name + ": crepant resolution needs rank <= 3");
  if (!is_gorenstein(*fan)) return diagnostic(s.name + ": crepant resolution requires an SL/Gorenstein model");
  return {kOk, render_fan(crepant_resolve(*fan)), ""};
}

inline RunResult cmd_verify(const Source& s, const Options& o) {
  auto m = parse_source(s, o);
  auto report = verify_mckay(m.model);
  RunResult r;
  r.out = o.format == Format::kKv ? render_kv(report) : render_table(report);
  if (!report.skipped() && !report.equal) r.status = kUnequal;
  if (r.status == kOk) return fractional_gate(report.orbifold_class, o, std::move(r));
  return r;
}

inline Fan fan_of_source(const Source& s, const Options& o) {
  auto m = parse_source(s, o);
  auto* t = std::get_if<ToricModel>(&m.model);
  if (!t) throw Error(s.name + ": compare takes toric fan files");
  return t->fan;
}

inline RunResult cmd_compare(const Source& a, const Source& b, const Options& o) {
  auto report = compare_k_equivalent(fan_of_source(a, o), fan_of_source(b, o));
  RunResult r;
  r.out = o.format == Format::kKv ? render_kv(report) : render_table(report);
  r.status = report.equal ? kOk : kUnequal;
  return r;
}

/// One summary line per entry plus its status.
inline std::pair<std::string, bool> catalog_line(const CatalogEntry& e, const Options& o) {
  try {
    auto a = parse_model(e.text, {o.cap});
    VerificationReport r;
    if (e.is_pair()) {
      auto b = parse_model(e.partner_text, {o.cap});
      r = compare_k_equivalent(std::get<ToricModel>(a.model).fan, std::get<ToricModel>(b.model).fan);
    } else {
      r = verify_mckay(a.model);
    }
    std::string line = e.name + ": equal = " + (r.skipped() ? "skipped" : (r.equal ? "true" : "false")) +
                       "; sectors = " + std::to_string(r.sectors.size()) + "; eorb = " + r.orbifold_class.render() +
                       "; chi = " + r.euler_orbifold.str();
    if (r.skipped() && !r.notes.empty()) line += "; note = " + r.notes.back();
    return {line, r.skipped() || r.equal};
  } catch (const Error& err) {
    return {e.name + ": error = " + err.what(), false};
  }
}

inline RunResult cmd_catalog(const Options& o) {
  const auto& entries = builtin_catalog();
  std::vector<std::future<std::pair<std::string, bool>>> jobs;
  jobs.reserve(entries.size());
  for (const auto& e : entries) jobs.push_back(std::async(std::launch::async, [&e, &o] { return catalog_line(e, o); }));
  RunResult r;
  for (auto& j : jobs) {
    auto [line, ok] = j.get();
    r.out += line + "\n";
    if (!ok) r.status = kUnequal;
  }
  return r;
}

inline RunResult cmd_selftest(const Options& o) {
  RunResult r;
  for (const auto& s : run_selftest(o.cap)) {
    r.out += std::string(s.ok ? "PASS " : "FAIL ") + s.name + " (" + std::to_string(s.checks) + " checks)";
    if (!s.ok) r.out += ": " + s.detail;
    r.out += "\n";
    if (!s.ok) r.status = kUnequal;
  }
  return r;
}

}  // namespace detail

/// Runs a command on in-memory sources.
inline RunResult run_sources(const std::string& command, const std::vector<Source>& sources, const Options& options) {
  auto want = [&](std::size_t n) -> std::optional<RunResult> {
    if (sources.size() == n) return std::nullopt;
    return detail::diagnostic("'" + command + "' expects " + std::to_string(n) + " model file" + (n == 1 ? "" : "s") +
                              ", got " + std::to_string(sources.size()));
  };
  if (std::find(commands().begin(), commands().end(), command) == commands().end())
    return detail::diagnostic("unknown command '" + command + "'");
  try {
    if (command == "catalog" || command == "selftest") {
      if (auto bad = want(0)) return *bad;
      return command == "catalog" ? detail::cmd_catalog(options) : detail::cmd_selftest(options);
    }
    if (command == "compare") {
      if (auto bad = want(2)) return *bad;
      return detail::cmd_compare(sources[0], sources[1], options);
    }
    if (auto bad = want(1)) return *bad;
    if (command == "sectors") return detail::cmd_sectors(sources[0], options);
    if (command == "stringy") return detail::cmd_stringy(sources[0], options);
    if (command == "resolve") return detail::cmd_resolve(sources[0], options);
    return detail::cmd_verify(sources[0], options);
  } catch (const std::exception& e) {
    return detail::diagnostic(e.what());
  }
}

/// Runs a command on model files read from disk.
inline RunResult run(const std::string& command, const std::vector<std::string>& files, const Options& options) {
  std::vector<Source> sources;
  try {
    for (const auto& f : files) sources.push_back(read_source(f));
  } catch (const Error& e) {
    return detail::diagnostic(e.what());
  }
  return run_sources(command, sources, options);
}

}  // namespace stringy::cli
