#include "cyclorth/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "cyclorth/numtheory.hpp"
#include "cyclorth/serialize.hpp"

namespace cyclorth::cli {

namespace {

namespace fs = std::filesystem;
using json::Json;

enum class Format { text, json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  Format format = Format::text;
  std::string cache_dir;
  bool no_cache = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

std::optional<fs::path> resolve_cache_dir(const Settings& s) {
  if (s.no_cache) return std::nullopt;
  if (!s.cache_dir.empty()) return fs::path(s.cache_dir);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return fs::path(xdg) / "cyclorth";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "cyclorth";
  }
  return std::nullopt;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like A..B, got '" + text + "'");
  auto parse = [&](const std::string& part) -> std::uint64_t {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) {
      throw UsageError("range bound '" + part + "' is not a positive integer");
    }
    return std::stoull(part);
  };
  const std::uint64_t a = parse(text.substr(0, dots));
  const std::uint64_t b = parse(text.substr(dots + 2));
  if (a < 1 || a > b) throw UsageError("range must satisfy 1 <= A <= B, got '" + text + "'");
  return {a, b};
}

std::vector<Rational> parse_coeffs(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      out.push_back(parse_rational(token));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("--coeffs needs at least one coefficient");
  return out;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string degree_text(const Degree& d) { return d ? std::to_string(*d) : "-inf (zero polynomial)"; }

void print_poly(std::ostream& out, const std::string& title, const IntPoly& f) {
  out << title << " (degree " << degree_text(f.degree()) << ")\n"
      << "coefficients: " << coeff_list(f) << '\n'
      << to_string(f) << '\n';
}

void print_stats(std::ostream& out, const std::string& label, const CoeffStats& s) {
  out << label << ": degree " << degree_text(s.degree) << ", height " << s.height
      << ", nonzero terms " << s.nonzero_terms << '\n';
}

void print_violations(std::ostream& out, const std::vector<Violation>& violations) {
  for (const auto& v : violations) {
    out << "  violation: d1=" << v.d1 << " l1=" << v.l1 << " d2=" << v.d2 << " l2=" << v.l2
        << " value=" << v.value << '\n';
  }
}

void print_gram(std::ostream& out, const GramReport& report) {
  std::size_t width = 1;
  for (const auto& e : report.matrix.data()) width = std::max(width, e.get_str().size());
  std::vector<bool> boundary(report.n, false);  // column/row i starts a new divisor block
  for (std::size_t i = 1; i < report.n; ++i) {
    boundary[i] = report.ordering[i].d != report.ordering[i - 1].d;
  }

  out << "Gram matrix for n=" << report.n << ", ordering (d,l):";
  for (const auto& idx : report.ordering) out << " (" << idx.d << ',' << idx.l << ')';
  out << '\n';

  std::string separator;
  for (std::size_t j = 0; j < report.n; ++j) {
    if (boundary[j]) separator += "-+";
    separator += std::string(width + (j == 0 ? 0 : 1), '-');
  }
  for (std::size_t i = 0; i < report.n; ++i) {
    if (boundary[i]) out << separator << '\n';
    for (std::size_t j = 0; j < report.n; ++j) {
      if (boundary[j]) out << " |";
      if (j > 0) out << ' ';
      out << std::setw(static_cast<int>(width)) << report.matrix(i, j).get_str();
    }
    out << '\n';
  }
  out << "block diagonal: " << (report.block_diagonal ? "yes" : "no") << '\n';
  print_violations(out, report.violations);
}

Json cert_summary(const VerificationCertificate& c) {
  Json j = json::certificate_result(c, false);
  j["n"] = c.n;
  return j;
}

void write_certificate(const fs::path& dir, const VerificationCertificate& cert) {
  fs::create_directories(dir);
  const fs::path file = dir / ("certificate_" + std::to_string(cert.n) + ".json");
  std::ofstream os(file, std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write certificate " + file.string());
  os << json::certificate_document(cert).dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CLI::App app{"Cyclotomic and inverse cyclotomic polynomials, the group algebra decomposition "
               "of Q[X]/(X^n - 1), and exact verification of the orthogonality of shifted "
               "cofactors X^l * Psi_{n,d}.",
               "cyclorth"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--cache-dir", settings.cache_dir,
                 std::string("Directory holding the Phi cache file (") + kCacheFileName +
                     "). Defaults to $" + kCacheDirEnv +
                     ", then $XDG_CACHE_HOME/cyclorth, then ~/.cache/cyclorth");
  app.add_flag("--no-cache", settings.no_cache, "Neither read nor write the Phi cache");
  app.add_option("--jobs", settings.jobs, "Worker threads for verification")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::uint64_t n = 0, d = 0;
  std::string algorithm_name = "auto";
  auto* phi_cmd = app.add_subcommand("phi", "Cyclotomic polynomial Phi_n");
  phi_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  phi_cmd->add_option("--algorithm", algorithm_name, "cascade, mobius, radical or auto")
      ->check(CLI::IsMember({"cascade", "mobius", "radical", "auto"}))
      ->capture_default_str();

  auto* psi_cmd = app.add_subcommand("psi", "Inverse cyclotomic polynomial Psi_n = (X^n - 1)/Phi_n");
  psi_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);

  auto* psind_cmd = app.add_subcommand("psind", "Cofactor Psi_{n,d} = (X^n - 1)/Phi_d");
  psind_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  psind_cmd->add_option("d", d)->required()->check(CLI::PositiveNumber);

  std::string range_text, certificate_dir;
  bool lemma = false;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check <X^l1 Psi_{n,d1}, X^l2 Psi_{n,d2}> = 0 for all distinct divisors d1, d2");
  auto* verify_n = verify_cmd->add_option("n", n)->check(CLI::PositiveNumber);
  auto* verify_range_opt =
      verify_cmd->add_option("--range", range_text, "Inclusive range A..B instead of a single n");
  verify_n->excludes(verify_range_opt);
  verify_cmd->add_option("--certificate", certificate_dir,
                         "Write one JSON certificate per n into this directory");
  verify_cmd->add_flag("--lemma", lemma,
                       "Also check the tensor pairing between every two components");

  std::size_t display_cap = 24;
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of all X^l Psi_{n,d}");
  gram_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  gram_cmd->add_option("--max-display", display_cap, "Largest n rendered as text")
      ->capture_default_str();

  std::string coeff_text;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "Split f in Q[X]/(X^n - 1) into its components");
  decompose_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  decompose_cmd->add_option("--coeffs", coeff_text, "c0,c1,... (integers or a/b)")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Coefficient statistics of Phi_n and Psi_n");
  stats_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  settings.format = format_name == "json" ? Format::json : Format::text;

  CycloCache cache;
  std::optional<fs::path> cache_file;
  if (auto dir = resolve_cache_dir(settings)) {
    cache_file = *dir / kCacheFileName;
    try {
      cache.load(*cache_file);
    } catch (const std::exception& e) {
      err << "warning: ignoring unreadable cache " << cache_file->string() << ": " << e.what()
          << '\n';
    }
  }

  int code = kExitOk;
  try {
    if (phi_cmd->parsed()) {
      const auto algorithm = *parse_algorithm(algorithm_name);
      const IntPoly f = algorithm == PhiAlgorithm::automatic ? cache.phi(n) : phi(n, algorithm);
      if (settings.format == Format::json) {
        emit(out, json::envelope("phi", {{"n", n}, {"algorithm", algorithm_name}},
                                 {{"coefficients", json::from_poly(f)}, {"degree", *f.degree()}}));
      } else {
        print_poly(out, "Phi_" + std::to_string(n), f);
      }
    } else if (psi_cmd->parsed()) {
      const IntPoly f = cache.psi(n);
      if (settings.format == Format::json) {
        emit(out, json::envelope("psi", {{"n", n}},
                                 {{"coefficients", json::from_poly(f)}, {"degree", *f.degree()}}));
      } else {
        print_poly(out, "Psi_" + std::to_string(n), f);
      }
    } else if (psind_cmd->parsed()) {
      if (n % d != 0) throw UsageError(std::to_string(d) + " does not divide " + std::to_string(n));
      const IntPoly f = cache.psi_nd(n, d);
      if (settings.format == Format::json) {
        emit(out, json::envelope("psind", {{"n", n}, {"d", d}},
                                 {{"coefficients", json::from_poly(f)}, {"degree", *f.degree()}}));
      } else {
        print_poly(out, "Psi_{" + std::to_string(n) + "," + std::to_string(d) + "}", f);
      }
    } else if (verify_cmd->parsed()) {
      std::uint64_t first = n, last = n;
      const bool ranged = !range_text.empty();
      if (ranged) {
        std::tie(first, last) = parse_range(range_text);
      } else if (n == 0) {
        throw UsageError("verify needs n or --range A..B");
      }
      VerifyOptions options;
      options.lemma = lemma;
      options.operand_hook = hooks.operand_hook;
      const auto certs = verify_range(first, last, settings.jobs, options, cache);

      bool all_pass = true;
      std::uint64_t total = 0, expected = 0;
      for (const auto& c : certs) {
        all_pass = all_pass && c.pass;
        total += c.checks_performed;
        expected += expected_check_count(c.n);
        if (!certificate_dir.empty()) write_certificate(certificate_dir, c);
      }
      if (total != expected) {
        throw std::logic_error("performed " + std::to_string(total) + " checks, expected " +
                               std::to_string(expected));
      }
      code = all_pass ? kExitOk : kExitViolation;

      if (settings.format == Format::json) {
        if (!ranged) {
          emit(out, json::envelope("verify", {{"n", n}}, json::certificate_result(certs[0], false)));
        } else {
          Json results = Json::array();
          for (const auto& c : certs) results.push_back(cert_summary(c));
          emit(out, json::envelope("verify", {{"range", {first, last}}},
                                   {{"pass", all_pass},
                                    {"checks_performed", total},
                                    {"lemma_checked", lemma},
                                    {"results", results}}));
        }
      } else if (!ranged) {
        const auto& c = certs[0];
        out << "n=" << c.n << ": " << (c.pass ? "pass" : "FAIL") << ", " << c.checks_performed
            << " checks" << (c.lemma_checked ? ", lemma checked" : "") << '\n';
        print_violations(out, c.violations);
      } else {
        for (const auto& c : certs) {
          if (c.pass) continue;
          out << "n=" << c.n << ": FAIL, " << c.violations.size() << " violations\n";
          print_violations(out, c.violations);
        }
        out << "n=" << first << ".." << last << ": " << (all_pass ? "pass" : "FAIL") << ", "
            << total << " checks" << (lemma ? ", lemma checked" : "") << '\n';
      }
    } else if (gram_cmd->parsed()) {
      if (settings.format == Format::text && n > display_cap) {
        throw UsageError("n=" + std::to_string(n) + " exceeds the text display cap of " +
                         std::to_string(display_cap) + "; use --format json");
      }
      const GramReport report = gram_matrix(n, cache);
      code = report.block_diagonal ? kExitOk : kExitViolation;
      if (settings.format == Format::json) {
        emit(out, json::envelope("gram", {{"n", n}}, json::from_gram(report)));
      } else {
        print_gram(out, report);
      }
    } else if (decompose_cmd->parsed()) {
      const RatPoly f(parse_coeffs(coeff_text));
      const auto parts = decompose(n, f, cache);
      if (settings.format == Format::json) {
        Json params_coeffs = Json::array();
        std::stringstream ss(coeff_text);
        for (std::string t; std::getline(ss, t, ',');) params_coeffs.push_back(t);
        Json components = Json::object();
        for (const auto& [dd, part] : parts) components[std::to_string(dd)] = json::from_poly(part);
        emit(out, json::envelope("decompose", {{"n", n}, {"coeffs", params_coeffs}},
                                 {{"components", components}}));
      } else {
        bool any = false;
        for (const auto& [dd, part] : parts) {
          if (part.is_zero()) continue;
          any = true;
          out << "d=" << dd << ": " << to_string(part) << '\n';
        }
        if (!any) out << "all components zero\n";
      }
    } else if (stats_cmd->parsed()) {
      const CoeffStats phi_stats = stats(cache.phi(n), n);
      const CoeffStats psi_stats = stats(cache.psi(n), n);
      if (settings.format == Format::json) {
        emit(out, json::envelope("stats", {{"n", n}},
                                 {{"phi", json::from_stats(phi_stats)},
                                  {"psi", json::from_stats(psi_stats)}}));
      } else {
        print_stats(out, "Phi_" + std::to_string(n), phi_stats);
        print_stats(out, "Psi_" + std::to_string(n), psi_stats);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cache_file && cache.dirty()) {
    try {
      cache.save(*cache_file);
    } catch (const std::exception& e) {
      err << "warning: could not save cache " << cache_file->string() << ": " << e.what() << '\n';
    }
  }
  return code;
}

}  // namespace cyclorth::cli
