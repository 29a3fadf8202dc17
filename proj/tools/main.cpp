// flinthills: certified evaluation of 1/(n^u |sin n|^v) series terms,
// continued-fraction convergents of pi, irrationality-exponent witnesses,
// and convergence classification under configurable mu(pi) bounds.
//
// stdout carries data records (JSON lines by default, CSV with
// --format csv); stderr carries diagnostics. Identical invocations produce
// byte-identical data output unless --timing is given.

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flinthills/criteria.hpp"
#include "flinthills/errors.hpp"
#include "flinthills/pi.hpp"
#include "flinthills/series.hpp"

namespace fh = flinthills;
using nlohmann::ordered_json;

namespace {

std::string fmt_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void flatten(const std::string& prefix, const ordered_json& j,
             std::vector<std::pair<std::string, std::string>>& row) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      flatten(prefix.empty() ? k : prefix + "." + k, v, row);
    }
  } else if (j.is_string()) {
    row.emplace_back(prefix, j.get<std::string>());
  } else {
    row.emplace_back(prefix, j.dump());
  }
}

// JSON lines or CSV. CSV derives its header from the first record; all
// records of one command share a schema.
class RecordWriter {
 public:
  RecordWriter(std::ostream& os, bool csv) : os_(os), csv_(csv) {}

  void write(const ordered_json& rec) {
    if (!csv_) {
      os_ << rec.dump() << "\n";
      return;
    }
    std::vector<std::pair<std::string, std::string>> row;
    flatten("", rec, row);
    if (header_.empty()) {
      for (size_t i = 0; i < row.size(); ++i)
        os_ << (i ? "," : "") << csv_escape(row[i].first);
      os_ << "\n";
      for (auto& kv : row) header_.push_back(kv.first);
    }
    for (size_t i = 0; i < row.size(); ++i)
      os_ << (i ? "," : "") << csv_escape(row[i].second);
    os_ << "\n";
  }

 private:
  std::ostream& os_;
  bool csv_;
  std::vector<std::string> header_;
};

ordered_json real_out(const fh::Ball& b, long digits) {
  long cert = b.certified_digits();
  long shown = std::min<long>(digits, std::max<long>(cert, 1));
  ordered_json j;
  j["value"] = b.decimal(shown);
  j["abs_error"] = b.rad().is_zero() ? "0" : b.rad().decimal(2, MPFR_RNDU);
  j["certified_digits"] = cert;
  return j;
}

struct Record {
  explicit Record(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json outputs = ordered_json::object();
  long min_cert = -1;

  void out_real(const std::string& key, const fh::Ball& b, long digits) {
    outputs[key] = real_out(b, digits);
    long cert = b.certified_digits();
    min_cert = min_cert < 0 ? cert : std::min(min_cert, cert);
  }

  ordered_json finish(bool timing, long elapsed_ms) const {
    ordered_json rec;
    rec["command"] = command;
    rec["inputs"] = inputs;
    rec["outputs"] = outputs;
    rec["certified_digits"] = min_cert < 0 ? 0 : min_cert;
    if (timing) rec["elapsed_ms"] = elapsed_ms;
    return rec;
  }
};

struct Global {
  std::string format = "json";
  long precision_cap = 0;  // 0: keep default / env
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool timing = false;

  bool csv() const { return format == "csv"; }
};

class Timer {
 public:
  long ms() const {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_)
            .count());
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(v[i]);
  }
  return out;
}

void emit_verdict(RecordWriter& w, const Global& g, const Timer& t,
                  const char* target, const fh::Verdict& v,
                  const ordered_json& inputs) {
  Record rec("classify");
  rec.inputs = inputs;
  rec.outputs["target"] = target;
  rec.outputs["kind"] = fh::to_string(v.kind);
  rec.outputs["theorem"] = v.theorem;
  rec.outputs["inequality"] = v.inequality;
  rec.outputs["threshold"] = fmt_double(v.threshold);
  rec.outputs["unknown_detail"] = v.unknown_detail;
  w.write(rec.finish(g.timing, t.ms()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Certified numerics for series of the form 1/(n^u |sin n|^v): "
      "high-precision sin(n), continued-fraction convergents of pi, "
      "irrationality-exponent witnesses, and convergence classification."};
  app.require_subcommand(1);

  Global g;
  if (const char* env = std::getenv("FLINTHILLS_PRECISION_CAP")) {
    g.precision_cap = std::atol(env);
  }
  app.add_option("--format", g.format, "Output format: json (lines) or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  long cap_flag = 0;
  app.add_option("--precision-cap", cap_flag,
                 "Working-precision cap in decimal digits "
                 "(env FLINTHILLS_PRECISION_CAP; default 100000)");
  app.add_option("--threads", g.threads,
                 "Worker threads for sum/spikes scans (results are "
                 "bit-identical for any value)");
  app.add_flag("--timing", g.timing,
               "Add elapsed_ms to records (breaks byte-for-byte "
               "reproducibility of the output)");

  // ---- pi ----
  long pi_digits_arg = 10;
  auto* cmd_pi = app.add_subcommand("pi", "Digits of pi from the cache");
  cmd_pi->add_option("--digits", pi_digits_arg, "Significant digits")
      ->required();

  // ---- convergents ----
  long conv_count = 0;
  std::string conv_max_q;
  auto* cmd_conv =
      app.add_subcommand("convergents", "Continued-fraction convergents of pi");
  auto* opt_count = cmd_conv->add_option("--count", conv_count,
                                         "How many convergents (from 3/1)");
  auto* opt_maxq = cmd_conv->add_option("--max-q", conv_max_q,
                                        "All convergents with q <= Q");
  opt_count->excludes(opt_maxq);
  opt_maxq->excludes(opt_count);

  // ---- witness ----
  long wit_index = 0;
  long wit_digits = 10;
  auto* cmd_wit = app.add_subcommand(
      "witness", "Irrationality-exponent witness of one convergent of pi");
  cmd_wit->add_option("--convergent-index", wit_index, "0-based index")
      ->required();
  cmd_wit->add_option("--digits", wit_digits, "Certified digits of residual");

  // ---- sin ----
  std::string sin_n;
  long sin_digits = 15;
  auto* cmd_sin = app.add_subcommand("sin", "Certified sin(n) for integer n");
  cmd_sin->add_option("--n", sin_n, "Positive integer")->required();
  cmd_sin->add_option("--digits", sin_digits, "Certified significant digits")
      ->required();

  // ---- term ----
  std::string term_n;
  double term_u = 0, term_v = 0;
  long term_digits = 12;
  auto* cmd_term =
      app.add_subcommand("term", "One series term 1/(n^u |sin n|^v)");
  cmd_term->add_option("--n", term_n)->required();
  cmd_term->add_option("--u", term_u)->required();
  cmd_term->add_option("--v", term_v)->required();
  cmd_term->add_option("--digits", term_digits);

  // ---- sum ----
  std::uint64_t sum_n = 0;
  double sum_u = 0, sum_v = 0;
  long sum_digits = 12;
  auto* cmd_sum = app.add_subcommand(
      "sum", "Partial sum through N, streamed at decade checkpoints");
  cmd_sum->add_option("--max-n", sum_n)->required();
  cmd_sum->add_option("--u", sum_u)->required();
  cmd_sum->add_option("--v", sum_v)->required();
  cmd_sum->add_option("--digits", sum_digits);

  // ---- spikes ----
  std::uint64_t spk_n = 0;
  double spk_u = 0, spk_v = 0, spk_thr = 0;
  long spk_digits = 12;
  std::string spk_mode = "auto";
  auto* cmd_spk =
      app.add_subcommand("spikes", "All n <= N with certified term > threshold");
  cmd_spk->add_option("--max-n", spk_n)->required();
  cmd_spk->add_option("--u", spk_u)->required();
  cmd_spk->add_option("--v", spk_v)->required();
  cmd_spk->add_option("--threshold", spk_thr)->required();
  cmd_spk->add_option("--mode", spk_mode, "auto | guided | brute")
      ->check(CLI::IsMember({"auto", "guided", "brute"}));
  cmd_spk->add_option("--digits", spk_digits);

  // ---- diag ----
  long diag_index = 0;
  double diag_u = 0, diag_v = 0;
  long diag_digits = 12;
  auto* cmd_diag = app.add_subcommand(
      "diag", "Two-subsequence diagnostic at convergent numerator p_i");
  cmd_diag->add_option("--convergent-index", diag_index)->required();
  cmd_diag->add_option("--u", diag_u)->required();
  cmd_diag->add_option("--v", diag_v)->required();
  cmd_diag->add_option("--digits", diag_digits);

  // ---- envelope ----
  std::uint64_t env_n = 0;
  double env_u = 0, env_v = 0, env_mu = 0, env_eps = 0;
  long env_digits = 12;
  auto* cmd_env = app.add_subcommand(
      "envelope", "Fit term(n) <= C n^-e with e = u - (mu-1) v - eps");
  cmd_env->add_option("--max-n", env_n)->required();
  cmd_env->add_option("--u", env_u)->required();
  cmd_env->add_option("--v", env_v)->required();
  cmd_env->add_option("--mu", env_mu)->required();
  cmd_env->add_option("--eps", env_eps)->required();
  cmd_env->add_option("--digits", env_digits);

  // ---- classify ----
  double cls_u = 0, cls_v = 0;
  double cls_lower = 2.0, cls_upper = 7.6064;
  auto* cmd_cls = app.add_subcommand(
      "classify", "Sequence/series classification under mu(pi) bounds");
  cmd_cls->add_option("--u", cls_u)->required();
  cmd_cls->add_option("--v", cls_v)->required();
  cmd_cls->add_option("--mu-lower", cls_lower)->capture_default_str();
  cmd_cls->add_option("--mu-upper", cls_upper)->capture_default_str();

  // ---- history ----
  app.add_subcommand("history", "Published upper bounds for mu(pi)");

  // Global flags remain usable after the subcommand name.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (cap_flag > 0) g.precision_cap = cap_flag;
  if (g.precision_cap > 0) fh::set_precision_cap(g.precision_cap);
  if (g.threads < 1) g.threads = 1;

  Timer timer;
  try {
    RecordWriter writer(std::cout, g.csv());

    if (cmd_pi->parsed()) {
      std::string value = fh::pi_digits(pi_digits_arg);
      Record rec("pi");
      rec.inputs["digits"] = pi_digits_arg;
      ordered_json out;
      out["value"] = value;
      // Rounded digit string: error at most half a unit in the last place.
      out["abs_error"] = fh::format_decimal("5", 1 - pi_digits_arg, false);
      out["certified_digits"] = pi_digits_arg;
      rec.outputs["pi"] = out;
      rec.min_cert = pi_digits_arg;
      writer.write(rec.finish(g.timing, timer.ms()));
    } else if (cmd_conv->parsed()) {
      std::vector<fh::Convergent> convs;
      ordered_json inputs;
      if (opt_count->count()) {
        inputs["count"] = conv_count;
        convs = fh::convergents_of(fh::pi_source(), conv_count);
      } else if (opt_maxq->count()) {
        inputs["max_q"] = conv_max_q;
        convs = fh::convergents_up_to_q(fh::pi_source(), mpz_class(conv_max_q));
      } else {
        std::cerr << "convergents: need --count or --max-q\n";
        return 2;
      }
      for (const auto& c : convs) {
        Record rec("convergents");
        rec.inputs = inputs;
        rec.outputs["index"] = c.index;
        rec.outputs["p"] = c.p.get_str();
        rec.outputs["q"] = c.q.get_str();
        writer.write(rec.finish(g.timing, timer.ms()));
      }
    } else if (cmd_wit->parsed()) {
      auto convs = fh::convergents_of(fh::pi_source(), wit_index + 1);
      auto witness =
          fh::exponent_witness(fh::pi_source(),
                               convs.at(static_cast<size_t>(wit_index)),
                               wit_digits);
      Record rec("witness");
      rec.inputs["convergent_index"] = wit_index;
      rec.inputs["digits"] = wit_digits;
      rec.outputs["p"] = witness.convergent.p.get_str();
      rec.outputs["q"] = witness.convergent.q.get_str();
      rec.out_real("residual", witness.residual, wit_digits);
      rec.out_real("delta", witness.delta, 6);
      writer.write(rec.finish(g.timing, timer.ms()));
    } else if (cmd_sin->parsed()) {
      mpz_class n(sin_n);
      fh::Ball s = fh::sin_of_integer(n, sin_digits);
      Record rec("sin");
      rec.inputs["n"] = sin_n;
      rec.inputs["digits"] = sin_digits;
      rec.out_real("sin", s, sin_digits);
      writer.write(rec.finish(g.timing, timer.ms()));
    } else if (cmd_term->parsed()) {
      mpz_class n(term_n);
      fh::TermEvaluation te =
          fh::term(n, {term_u, term_v}, term_digits);
      Record rec("term");
      rec.inputs["n"] = term_n;
      rec.inputs["u"] = fmt_double(term_u);
      rec.inputs["v"] = fmt_double(term_v);
      rec.inputs["digits"] = term_digits;
      rec.out_real("term", te.term, term_digits);
      rec.outputs["m"] = te.multiple.get_str();
      rec.out_real("residual", te.residual, term_digits);
      writer.write(rec.finish(g.timing, timer.ms()));
    } else if (cmd_sum->parsed()) {
      ordered_json inputs;
      inputs["max_n"] = sum_n;
      inputs["u"] = fmt_double(sum_u);
      inputs["v"] = fmt_double(sum_v);
      inputs["digits"] = sum_digits;
      std::vector<std::uint64_t> checkpoints;
      for (std::uint64_t c = 10; c < sum_n; c *= 10) checkpoints.push_back(c);
      checkpoints.push_back(sum_n);
      for (std::uint64_t c : checkpoints) {
        fh::PartialSum ps =
            fh::partial_sum(c, {sum_u, sum_v}, sum_digits, g.threads);
        Record rec("sum");
        rec.inputs = inputs;
        rec.outputs["upto_n"] = c;
        rec.out_real("sum", ps.sum, sum_digits);
        writer.write(rec.finish(g.timing, timer.ms()));
      }
    } else if (cmd_spk->parsed()) {
      fh::SpikeMode mode = fh::SpikeMode::kAuto;
      if (spk_mode == "guided") mode = fh::SpikeMode::kConvergentGuided;
      if (spk_mode == "brute") mode = fh::SpikeMode::kBruteForce;
      fh::SpikeScan scan = fh::spikes(spk_n, {spk_u, spk_v}, spk_thr, mode,
                                      g.threads, spk_digits);
      for (const auto& te : scan.found) {
        Record rec("spikes");
        rec.inputs["max_n"] = spk_n;
        rec.inputs["u"] = fmt_double(spk_u);
        rec.inputs["v"] = fmt_double(spk_v);
        rec.inputs["threshold"] = fmt_double(spk_thr);
        rec.inputs["mode"] = spk_mode;
        rec.outputs["n"] = te.n.get_str();
        rec.out_real("term", te.term, spk_digits);
        rec.outputs["m"] = te.multiple.get_str();
        rec.out_real("residual", te.residual, spk_digits);
        writer.write(rec.finish(g.timing, timer.ms()));
      }
      std::cerr << "spikes: " << scan.found.size() << " found, "
                << scan.failed.size() << " candidates failed\n";
      for (const auto& n : scan.failed)
        std::cerr << "spikes: candidate n=" << n.get_str()
                  << " hit the precision cap\n";
      if (!scan.failed.empty()) return 3;
    } else if (cmd_diag->parsed()) {
      fh::SubsequenceDiagnostic d = fh::subsequence_diagnostic(
          diag_index, {diag_u, diag_v}, diag_digits);
      Record rec("diag");
      rec.inputs["convergent_index"] = diag_index;
      rec.inputs["u"] = fmt_double(diag_u);
      rec.inputs["v"] = fmt_double(diag_v);
      rec.inputs["digits"] = diag_digits;
      rec.outputs["p"] = d.convergent.p.get_str();
      rec.outputs["q"] = d.convergent.q.get_str();
      rec.out_real("term_at_p", d.at_numerator.term, diag_digits);
      rec.out_real("term_at_p_plus_1", d.after_numerator.term, diag_digits);
      rec.out_real("sin_one_plus_p", d.sin_one_plus_p, diag_digits);
      rec.out_real("sin_one", d.sin_one, diag_digits);
      writer.write(rec.finish(g.timing, timer.ms()));
    } else if (cmd_env->parsed()) {
      fh::EnvelopeFit fit = fh::envelope_check(env_n, {env_u, env_v}, env_mu,
                                               env_eps, env_digits);
      Record rec("envelope");
      rec.inputs["max_n"] = env_n;
      rec.inputs["u"] = fmt_double(env_u);
      rec.inputs["v"] = fmt_double(env_v);
      rec.inputs["mu"] = fmt_double(env_mu);
      rec.inputs["eps"] = fmt_double(env_eps);
      rec.outputs["e"] = fmt_double(fit.exponent_e);
      rec.out_real("fitted_C", fit.fitted_c, env_digits);
      rec.outputs["argmax_n"] = join(fit.argmax_n);
      writer.write(rec.finish(g.timing, timer.ms()));
    } else if (cmd_cls->parsed()) {
      fh::MuBounds bounds;
      bounds.lower = cls_lower;
      bounds.upper = cls_upper;
      fh::SeriesParams params{cls_u, cls_v};
      ordered_json inputs;
      inputs["u"] = fmt_double(cls_u);
      inputs["v"] = fmt_double(cls_v);
      inputs["mu_lower"] = fmt_double(cls_lower);
      inputs["mu_upper"] = fmt_double(cls_upper);
      emit_verdict(writer, g, timer, "sequence",
                   fh::classify_sequence(params, bounds), inputs);
      emit_verdict(writer, g, timer, "series",
                   fh::classify_series(params, bounds), inputs);
    } else if (app.get_subcommand("history")->parsed()) {
      for (const auto& e : fh::bound_history()) {
        Record rec("history");
        rec.outputs["year"] = e.year;
        rec.outputs["author"] = e.author;
        rec.outputs["bound"] = fmt_double(e.bound);
        rec.outputs["note"] = e.note;
        writer.write(rec.finish(g.timing, timer.ms()));
      }
    }
    std::cout.flush();
    return 0;
  } catch (const fh::PrecisionCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
