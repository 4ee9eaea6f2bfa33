#include "ratapprox/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "ratapprox/best_approx.hpp"
#include "ratapprox/continued_fraction.hpp"
#include "ratapprox/render.hpp"
#include "ratapprox/verify.hpp"

namespace ratapprox {

namespace {

enum class Format { Tsv, Csv, Pretty };

struct RunConfig {
  std::vector<std::string> alphas;
  std::vector<long> max_q{};
  std::string kind;
  std::string algorithm = "rcf";
  long terms = 8;
  long top = -1;
  std::string below;
  std::string format = "tsv";
  int digits = 9;
  std::string style = "pretty";
  int threads = 1;
};

Format parse_format(const std::string& s) {
  if (s == "tsv") return Format::Tsv;
  if (s == "csv") return Format::Csv;
  if (s == "pretty") return Format::Pretty;
  throw CLI::ValidationError("--format", "expected tsv|csv|pretty");
}

void emit_rows(std::ostream& out, Format format, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  if (format == Format::Pretty) {
    std::vector<size_t> widths(header.size());
    for (size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
    for (const auto& row : rows)
      for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (size_t c = 0; c < cells.size(); ++c) {
        if (c) out << "  ";
        out << cells[c];
        if (c + 1 < cells.size()) out << std::string(widths[c] - cells[c].size(), ' ');
      }
      out << "\n";
    };
    line(header);
    for (const auto& row : rows) line(row);
    return;
  }
  char sep = format == Format::Tsv ? '\t' : ',';
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << sep;
      out << row[c];
    }
    out << "\n";
  }
}

ScanOptions scan_options(const RunConfig& cfg) {
  ScanOptions opts;
  opts.threads = cfg.threads;
  return opts;
}

long single_max_q(const RunConfig& cfg) { return cfg.max_q.empty() ? 1000 : cfg.max_q.front(); }

Kind required_kind(const RunConfig& cfg) {
  auto k = parse_kind(cfg.kind);
  if (!k) throw CLI::ValidationError("--kind", "expected I|II|III");
  return *k;
}

Style required_style(const RunConfig& cfg) {
  auto s = parse_style(cfg.style);
  if (!s) throw CLI::ValidationError("--style", "expected paper|pretty");
  return *s;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  AlphaOracle alpha(parse_alpha(cfg.alphas.front()));
  Kind kind = required_kind(cfg);
  Style style = required_style(cfg);
  BrainSequence seq = brain_sequence(alpha, single_max_q(cfg), kind, scan_options(cfg));
  std::vector<std::vector<std::string>> rows;
  for (auto& item : seq.items) {
    rows.push_back({std::to_string(item.k), item.record.q.get_str(), item.record.p.get_str(),
                    std::string(1, sign_char(item.record.sign)),
                    render_key(item.record, key_for(kind), alpha, style, cfg.digits)});
  }
  emit_rows(out, parse_format(cfg.format), {"k", "q", "p", "sign", "key"}, rows);
  return 0;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  AlphaOracle alpha(parse_alpha(cfg.alphas.front()));
  Kind kind = required_kind(cfg);
  Style style = required_style(cfg);
  if (cfg.top >= 1 && !cfg.below.empty())
    throw CLI::ValidationError("--top/--below", "choose one");
  TableSelect select = TableSelect::top_k(20);
  if (cfg.top >= 1)
    select = TableSelect::top_k(cfg.top);
  else if (!cfg.below.empty())
    select = TableSelect::below_threshold(parse_rational(cfg.below));
  else if (kind == Kind::Third)
    select = TableSelect::below_threshold(Rat(1));
  auto records = table_mode(alpha, single_max_q(cfg), kind, select, scan_options(cfg));
  std::vector<std::vector<std::string>> rows;
  for (auto& rec : records) {
    rows.push_back({rec.q.get_str(), rec.p.get_str(), std::string(1, sign_char(rec.sign)),
                    render_key(rec, key_for(kind), alpha, style, cfg.digits)});
  }
  emit_rows(out, parse_format(cfg.format), {"q", "p", "sign", "key"}, rows);
  return 0;
}

int cmd_cf(const RunConfig& cfg, std::ostream& out) {
  AlphaOracle alpha(parse_alpha(cfg.alphas.front()));
  CFExpansion exp;
  if (cfg.algorithm == "rcf")
    exp = rcf_expand(alpha, cfg.terms);
  else if (cfg.algorithm == "nicf")
    exp = nicf_expand(alpha, cfg.terms);
  else
    throw CLI::ValidationError("--algorithm", "expected rcf|nicf");
  out << format_quotients(exp) << "\n";
  for (const Fraction& f : exp.convergents) out << f.str() << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opts;
  opts.n = single_max_q(cfg);
  opts.scan = scan_options(cfg);
  long passed = 0, total = 0;
  for (const std::string& spec_text : cfg.alphas) {
    AlphaOracle alpha(parse_alpha(spec_text));
    for (const CheckResult& r : verify_alpha(alpha, spec_text, opts)) {
      ++total;
      if (r.pass) ++passed;
      out << (r.pass ? "[PASS] " : "[FAIL] ") << r.alpha << "/" << r.name << ": " << r.detail
          << "\n";
    }
  }
  out << "verify: " << passed << "/" << total << " checks passed\n";
  return passed == total ? 0 : 1;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  AlphaOracle alpha(parse_alpha(cfg.alphas.front()));
  std::vector<long> ns = cfg.max_q.empty() ? std::vector<long>{1000} : cfg.max_q;
  if (!std::is_sorted(ns.begin(), ns.end()))
    throw CLI::ValidationError("--max-q", "bench sizes must be ascending");

  std::vector<std::vector<std::string>> rows;
  std::vector<double> scan_ms, cf_ms;
  for (long n : ns) {
    auto t0 = std::chrono::steady_clock::now();
    BrainSequence seq = brain_sequence(alpha, n, Kind::Second, scan_options(cfg));
    auto t1 = std::chrono::steady_clock::now();
    // expand until the convergents cover the same denominator range
    long terms = 4;
    CFExpansion exp;
    for (;;) {
      exp = rcf_expand(alpha, terms);
      if (exp.convergents.back().den > n) break;
      terms *= 2;
    }
    auto t2 = std::chrono::steady_clock::now();
    double ms_scan = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double ms_cf = std::chrono::duration<double, std::milli>(t2 - t1).count();
    scan_ms.push_back(ms_scan);
    cf_ms.push_back(ms_cf);
    std::ostringstream s1, s2, s3;
    s1.precision(3);
    s2.precision(3);
    s3.precision(3);
    s1 << std::fixed << ms_scan;
    s2 << std::fixed << ms_cf;
    s3 << std::fixed << (ms_cf > 0 ? ms_scan / ms_cf : 0.0);
    rows.push_back({std::to_string(n), s1.str(), s2.str(), s3.str(),
                    std::to_string(seq.items.size()) + "/" + std::to_string(exp.convergents.size())});
  }
  emit_rows(out, parse_format(cfg.format), {"N", "scan_ms", "cf_ms", "ratio", "items"}, rows);
  if (ns.size() >= 2) {
    bool scan_grows = scan_ms.back() > scan_ms.front();
    bool cf_flat = cf_ms.back() < 16 * std::max(cf_ms.front(), 0.01);
    out << "# soft check: scan time " << (scan_grows ? "grows" : "does not grow")
        << " with N; continued-fraction time " << (cf_flat ? "stays near-flat" : "grows") << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact best rational approximations, continued fractions and"
               " Dirichlet witnesses for irrational constants"};
  app.name("ratapprox");
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool multi_alpha, bool multi_n) {
    auto* alpha = sub->add_option("--alpha", cfg.alphas,
                                  "constant spec: pi | e | phi | sqrt:<d> | quad:<a>,<b>,<c>,<d>"
                                  " | dec:<digits>[@<bound>]");
    alpha->required();
    if (!multi_alpha) alpha->expected(1);
    auto* n = sub->add_option("--max-q", cfg.max_q, "denominator bound (default 1000)");
    n->check(CLI::PositiveNumber);
    if (!multi_n) n->expected(0, 1);
    sub->add_option("--format", cfg.format, "tsv|csv|pretty")->capture_default_str();
    sub->add_option("--digits", cfg.digits, "significant digits for pretty style")
        ->check(CLI::Range(3, 30))
        ->capture_default_str();
    sub->add_option("--style", cfg.style, "paper|pretty")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "scan worker threads (output is byte-identical)")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
  };

  CLI::App* scan = app.add_subcommand("scan", "streaming best-approximation sequence");
  add_common(scan, false, false);
  scan->add_option("--kind", cfg.kind, "I|II|III")->required();

  CLI::App* table = app.add_subcommand("table", "full sorted scan, spreadsheet style");
  add_common(table, false, false);
  table->add_option("--kind", cfg.kind, "I|II|III")->required();
  table->add_option("--top", cfg.top, "keep the first k sorted rows (default 20)");
  table->add_option("--below", cfg.below, "keep rows with key below this rational");

  CLI::App* cf = app.add_subcommand("cf", "continued-fraction expansion");
  add_common(cf, false, false);
  cf->add_option("--algorithm", cfg.algorithm, "rcf|nicf")->capture_default_str();
  cf->add_option("--terms", cfg.terms, "quotient count")->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "cross-module property battery");
  add_common(verify, true, false);

  CLI::App* bench = app.add_subcommand("bench", "scan vs continued-fraction timing");
  add_common(bench, false, true);

  app.require_subcommand(1);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (scan->parsed()) return cmd_scan(cfg, out);
    if (table->parsed()) return cmd_table(cfg, out);
    if (cf->parsed()) return cmd_cf(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (bench->parsed()) return cmd_bench(cfg, out);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const precision_exhausted& e) {
    err << "precision exhausted: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const rational_value_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ratapprox
