// Command-line front end: derive, jacobi, invariants, classify, slice, split.
// Exit codes: 0 success, 1 parse error, 2 domain error, 3 expectation
// mismatch, 4 inconclusive result under --require-exact.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ncsing/classify.hpp"
#include "ncsing/commpoly.hpp"
#include "ncsing/errors.hpp"
#include "ncsing/parser.hpp"
#include "ncsing/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitInconclusive = 4;

struct Options {
  std::string vars;
  int cap = 20;
  std::string format = "text";
  bool require_exact = false;
};

long long now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

ncsing::Potential parse_potential(const std::string& expr, const ncsing::Alphabet& alphabet,
                                  int cap) {
  return ncsing::Potential(ncsing::parse_poly(expr, alphabet, cap));
}

void print_report(const ncsing::Report& report, const Options& opt) {
  if (opt.format == "json") {
    std::cout << ncsing::to_json(report).dump(2) << '\n';
  } else {
    std::cout << ncsing::to_text(report);
  }
}

int report_command(const std::string& expr, const Options& opt, bool with_type) {
  ncsing::Alphabet alphabet = ncsing::Alphabet::split_names(opt.vars);
  long long t0 = now_ms();
  ncsing::Potential f = parse_potential(expr, alphabet, opt.cap);
  std::optional<ncsing::TypeClass> type;
  ncsing::Analysis analysis = [&] {
    if (!with_type) return ncsing::analyze(f, opt.cap);
    ncsing::Classification c = ncsing::classify_full(f, opt.cap);
    type = c.type;
    return std::move(c.analysis);
  }();
  ncsing::Report report = ncsing::make_report(f, analysis, type, now_ms() - t0);
  print_report(report, opt);
  if (opt.require_exact &&
      report.certificate != ncsing::Certificate::Exact) {
    return kExitInconclusive;
  }
  if (opt.require_exact && report.jdim == ncsing::JdimVerdict::Inconclusive) {
    return kExitInconclusive;
  }
  return kExitOk;
}

int classify_batch(const std::string& path, const Options& opt, unsigned jobs) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open batch file '" << path << "'\n";
    return kExitDomain;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.find_first_not_of(" \t") != std::string::npos) lines.push_back(line);
  }
  ncsing::Alphabet alphabet = ncsing::Alphabet::split_names(opt.vars);

  auto run_one = [&](const std::string& expr) -> std::string {
    long long t0 = now_ms();
    ncsing::Potential f = parse_potential(expr, alphabet, opt.cap);
    ncsing::Classification c = ncsing::classify_full(f, opt.cap);
    ncsing::Report report = ncsing::make_report(f, c.analysis, c.type, now_ms() - t0);
    if (opt.format == "json") return ncsing::to_json(report).dump();
    std::ostringstream line;
    line << report.input << "  ->  " << ncsing::coarse_name(c.type.coarse) << " ["
         << ncsing::situation_name(c.type.situation) << "]";
    for (const auto& tag : c.type.candidates) line << ' ' << ncsing::tag_name(tag);
    return line.str();
  };

  if (jobs <= 1) {
    for (const auto& expr : lines) std::cout << run_one(expr) << '\n';
    return kExitOk;
  }
  std::atomic<std::size_t> cursor{0};
  // one independent computation per line, at most `jobs` in flight
  std::vector<std::string> results(lines.size());
  auto worker = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= lines.size()) return;
      results[i] = run_one(lines[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& r : results) std::cout << r << '\n';
  return kExitOk;
}

std::string read_expression_or_file(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return arg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncommutative singularity toolkit: Jacobi algebras of potentials,"
               " truncated local standard bases, dimension/corank/Jdim invariants,"
               " ADE-style classification"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--vars", opt.vars, "comma-separated variable names, e.g. x,y")->required();
  app.add_option("--cap", opt.cap, "truncation degree (default 20)");
  app.add_option("--format", opt.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--require-exact", opt.require_exact,
               "exit 4 when the certificate is not exact or a verdict is inconclusive");

  std::string expr, wrt, at, expect, batch;
  unsigned jobs = 1;

  auto* derive = app.add_subcommand("derive", "cyclic derivative of an expression");
  derive->add_option("--wrt", wrt, "variable to differentiate by")->required();
  derive->add_option("expr", expr, "expression")->required();

  auto* jacobi = app.add_subcommand("jacobi", "Jacobi-ideal generators and standard basis");
  jacobi->add_option("expr", expr, "potential")->required();

  auto* invariants = app.add_subcommand("invariants", "coranks, dimension and Jdim");
  invariants->add_option("expr", expr, "potential")->required();

  auto* classify = app.add_subcommand("classify", "coarse ADE type and candidate families");
  classify->add_option("expr", expr, "potential");
  classify->add_option("--batch", batch, "file with one potential per line");
  classify->add_option("--jobs", jobs, "concurrent classifications for --batch");

  auto* slice = app.add_subcommand("slice", "set a variable to zero in a commutative polynomial");
  slice->add_option("--at", at, "variable to set to zero")->required();
  slice->add_option("--expect", expect, "expected result; mismatch exits 3");
  slice->add_option("expr", expr, "expression or path to a file containing one")->required();

  auto* split = app.add_subcommand("split", "Splitting Lemma: squares + residual potential");
  split->add_option("expr", expr, "potential")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    ncsing::Alphabet alphabet = ncsing::Alphabet::split_names(opt.vars);

    if (derive->parsed()) {
      ncsing::NcJet f = ncsing::parse_poly(expr, alphabet, opt.cap);
      auto v = alphabet.find(wrt);
      if (!v) throw ncsing::DomainError("unknown variable '" + wrt + "'");
      std::cout << ncsing::format(ncsing::cyclic_derivative(f, *v)) << '\n';
      return kExitOk;
    }

    if (jacobi->parsed() || invariants->parsed()) {
      return report_command(expr, opt, /*with_type=*/false);
    }

    if (classify->parsed()) {
      if (!batch.empty()) return classify_batch(batch, opt, jobs);
      if (expr.empty()) throw ncsing::DomainError("classify needs an expression or --batch");
      return report_command(expr, opt, /*with_type=*/true);
    }

    if (slice->parsed()) {
      std::string text = read_expression_or_file(expr);
      ncsing::CommPoly p = ncsing::parse_comm(text, alphabet);
      ncsing::CommPoly sliced = ncsing::substitute_zero(p, at);
      std::cout << ncsing::format(sliced) << '\n';
      if (!expect.empty()) {
        ncsing::CommPoly want = ncsing::parse_comm(expect, alphabet);
        if (sliced != want) {
          std::cerr << "mismatch: expected " << ncsing::format(want) << '\n';
          return kExitMismatch;
        }
        std::cout << "match\n";
      }
      return kExitOk;
    }

    if (split->parsed()) {
      ncsing::Potential f = parse_potential(expr, alphabet, opt.cap);
      ncsing::SplitResult s = ncsing::split(f);
      std::cout << "r:            " << s.r << '\n';
      std::ostringstream squares;
      for (std::size_t i = 0; i < s.r; ++i) {
        if (i) squares << " + ";
        squares << ncsing::format_rational(s.square_scalars[i]) << "*"
                << alphabet.name(static_cast<ncsing::Letter>(i)) << "^2";
      }
      std::cout << "squares:      " << (s.r ? squares.str() : "(none)") << '\n';
      std::cout << "g:            " << ncsing::format(s.residual_on_original) << '\n';
      std::ostringstream names;
      for (std::size_t i = 0; i < s.residual_names.size(); ++i) {
        if (i) names << ", ";
        names << s.residual_names[i];
      }
      std::cout << "g variables:  " << (s.residual_names.empty() ? "(none)" : names.str())
                << '\n';
      return kExitOk;
    }
  } catch (const ncsing::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ncsing::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}
