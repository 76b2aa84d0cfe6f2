#include "cindkit/runner.h"

#include "cindkit/autf2.h"
#include "cindkit/family.h"
#include "cindkit/groups.h"
#include "cindkit/irs.h"
#include "cindkit/parallel.h"
#include "cindkit/rational.h"
#include "cindkit/smallcanc.h"
#include "cindkit/word.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace cindkit {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur = trimmed(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

// Element lists split on commas at bracket depth zero, so "[g0,h0]" is one
// element and "g0, h0" is two.
std::vector<std::string> split_elements(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    else if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      cur = trimmed(cur);
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cur = trimmed(cur);
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<Element> parse_element_set(const GroupInstance& inst, const std::string& s) {
  std::vector<Element> out;
  for (const std::string& tok : split_elements(s)) out.push_back(inst.parse_element(tok));
  return out;
}

// Images of w0 under the truncated outer-coset representatives; the first
// representative is the identity.
std::vector<Word> orbit_relators(int n, int L, bool exclude_identity) {
  Word base = family_base(n);
  std::vector<Endo> reps = transversal_R(L);
  std::vector<Word> out;
  out.reserve(reps.size());
  for (std::size_t i = exclude_identity ? 1 : 0; i < reps.size(); ++i)
    out.push_back(reps[i].apply(base));
  return out;
}

SymmetrizedSet load_relators(const RunConfig& cfg) {
  if (!cfg.relators.empty()) return SymmetrizedSet::symmetrize(read_relator_file(cfg.relators));
  if (cfg.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (cfg.L < 0) throw std::invalid_argument("--L must be nonnegative");
  return SymmetrizedSet::symmetrize(orbit_relators(cfg.n, cfg.L, cfg.exclude_identity));
}

Json violation_json(const ClaimViolation& v) {
  Json row;
  row["x"] = v.x;
  row["y"] = v.y;
  row["rho"] = v.rho;
  row["sigma"] = v.sigma;
  row["piece"] = v.piece;
  row["ratio"] = v.ratio;
  if (!v.detail.empty()) row["detail"] = v.detail;
  return row;
}

Json config_json(const RunConfig& cfg) {
  Json c;
  c["format"] = cfg.format;
  c["jobs"] = cfg.jobs;
  c["seed"] = cfg.seed;
  c["n"] = cfg.n;
  c["L"] = cfg.L;
  c["k_max"] = cfg.k_max;
  c["lambda"] = cfg.lambda;
  if (!cfg.instance.empty()) c["instance"] = cfg.instance;
  if (!cfg.inner.empty()) c["inner"] = cfg.inner;
  if (!cfg.theta.empty()) c["theta"] = cfg.theta;
  if (!cfg.set.empty()) c["set"] = cfg.set;
  if (!cfg.word.empty()) c["word"] = cfg.word;
  if (!cfg.aut.empty()) c["aut"] = cfg.aut;
  if (!cfg.relators.empty()) c["relators"] = cfg.relators;
  if (cfg.exclude_identity) c["exclude_identity"] = true;
  if (!cfg.claims.empty()) c["claims"] = cfg.claims;
  if (!cfg.grid.empty()) c["grid"] = cfg.grid;
  if (cfg.weakmix) c["weakmix"] = true;
  c["K"] = cfg.K;
  if (!cfg.candidate.empty()) c["candidate"] = cfg.candidate;
  c["samples"] = cfg.samples;
  return c;
}

unsigned resolve_jobs(const RunConfig& cfg) { return cfg.jobs ? cfg.jobs : default_jobs(); }

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// ---- command handlers ------------------------------------------------------

void cmd_words_reduce(const RunConfig& cfg, RunOutcome& out) {
  require(!cfg.word.empty(), "words reduce requires --word");
  Word w = Word::parse(cfg.word);
  CyclicWord c(w);
  out.report.summary["input"] = cfg.word;
  out.report.summary["reduced"] = w.str();
  out.report.summary["length"] = w.length();
  out.report.summary["cyclic"] = c.str();
  out.report.summary["cyclic_length"] = c.length();
  out.report.checks.push_back({"reduce", true, Json()});
  out.text = w.str() + "\n";
}

void cmd_auto_apply(const RunConfig& cfg, RunOutcome& out) {
  require(!cfg.aut.empty(), "auto apply requires --aut");
  require(!cfg.word.empty(), "auto apply requires --word");
  Endo f = parse_provenance(cfg.aut);
  Word w = Word::parse(cfg.word);
  Word img = f.apply(w);
  out.report.summary["aut"] = f.provenance_str();
  out.report.summary["image_a"] = f.image_a().str();
  out.report.summary["image_b"] = f.image_b().str();
  out.report.summary["word"] = w.str();
  out.report.summary["image"] = img.str();
  out.report.summary["growth"] = growth(f);
  out.report.checks.push_back({"apply", true, Json()});
  out.text = img.str() + "\n";
}

void cmd_family_build(const RunConfig& cfg, RunOutcome& out) {
  require(cfg.n >= 2, "--n must be at least 2");
  std::vector<FamilyWord> fam = build_family(cfg.n);
  Json rows = Json::array();
  std::ostringstream text;
  for (const FamilyWord& z : fam) {
    Json row;
    row["name"] = z.name();
    row["length"] = z.word.length();
    row["word"] = z.word.str();
    rows.push_back(std::move(row));
    out.report.checks.push_back({z.name(), true, Json()});
    text << z.name() << "  len=" << z.word.length() << "  " << z.word.str() << "\n";
  }
  out.report.summary["n"] = cfg.n;
  out.report.summary["words"] = std::move(rows);
  out.text = text.str();
}

void cmd_sc_check(const RunConfig& cfg, RunOutcome& out, std::ostream* err) {
  Rational lambda = parse_rational(cfg.lambda);
  require(lambda > 0, "--lambda must be positive");
  SymmetrizedSet set = load_relators(cfg);
  if (err)
    *err << "sc check: " << set.size() << " cycle classes, threshold " << rational_str(lambda)
         << "\n";
  CancellationCheck res = check_small_cancellation(set, lambda, resolve_jobs(cfg));
  out.report.summary["lambda"] = rational_str(res.lambda);
  out.report.summary["pairs_checked"] = res.pairs_checked;
  out.report.summary["max_ratio"] = rational_str(res.worst.ratio);
  out.report.summary["witness"] = res.worst.witness.str();
  out.report.summary["pass"] = res.pass;
  Json wit;
  wit["x"] = static_cast<long long>(res.worst.x);
  wit["y"] = static_cast<long long>(res.worst.y);
  wit["piece"] = res.worst.piece_length;
  wit["ratio"] = rational_str(res.worst.ratio);
  wit["witness"] = res.worst.witness.str();
  out.report.checks.push_back({"c-prime", res.pass, std::move(wit)});
  std::ostringstream text;
  text << "C'(" << rational_str(res.lambda) << ") " << (res.pass ? "PASS" : "FAIL")
       << ": pairs=" << res.pairs_checked << " max_ratio=" << rational_str(res.worst.ratio)
       << " witness=" << res.worst.witness.str() << "\n";
  out.text = text.str();
}

void cmd_sc_dehn(const RunConfig& cfg, RunOutcome& out, std::ostream* err) {
  require(!cfg.word.empty(), "sc dehn requires --word");
  Word z = Word::parse(cfg.word);
  SymmetrizedSet set = load_relators(cfg);
  Rational lambda = parse_rational(cfg.lambda);
  if (err) *err << "sc dehn: certifying " << set.size() << " cycle classes\n";
  check_small_cancellation(set, lambda, resolve_jobs(cfg));
  DehnResult res = dehn_reduce(z, set);
  bool trace_ok = verify_dehn_trace(z, set, res);
  out.report.summary["word"] = z.str();
  out.report.summary["result"] = res.result.str();
  out.report.summary["steps"] = static_cast<long long>(res.trace.size());
  out.report.summary["identity"] = res.reduced_to_identity;
  out.report.summary["heuristic_only"] = res.heuristic_only;
  out.report.checks.push_back({"dehn", true, Json(res.result.str())});
  out.report.checks.push_back({"trace-replay", trace_ok, Json()});
  std::ostringstream text;
  text << res.result.str() << "  steps=" << res.trace.size()
       << (res.reduced_to_identity ? "  (normal-closure member)" : "")
       << (res.heuristic_only ? "  [heuristic: set not certified]" : "") << "\n";
  out.text = text.str();
}

void cmd_sc_certify(const RunConfig& cfg, RunOutcome& out, std::ostream* err) {
  require(!cfg.word.empty(), "sc certify requires --word");
  Word z = Word::parse(cfg.word);
  SymmetrizedSet set = load_relators(cfg);
  Rational lambda = parse_rational(cfg.lambda);
  if (err) *err << "sc certify: certifying " << set.size() << " cycle classes\n";
  CancellationCheck cc = check_small_cancellation(set, lambda, resolve_jobs(cfg));
  require(cc.pass, "relator set fails the cancellation check; certificate unavailable");
  std::optional<LengthCertificate> cert = non_membership_certificate(z, set);
  out.report.summary["word"] = z.str();
  out.report.summary["z_length"] = CyclicWord(z).length();
  out.report.summary["min_relator_length"] = set.min_length();
  out.report.summary["certified"] = cert.has_value();
  if (cert) {
    Json wit;
    wit["z_length"] = cert->z_length;
    wit["min_relator_length"] = cert->min_relator_length;
    out.report.checks.push_back({"certificate", true, std::move(wit)});
    std::ostringstream text;
    text << "certificate: |z| = " << cert->z_length << " < " << cert->min_relator_length
         << " = min relator length; z avoids the truncated normal closure\n";
    out.text = text.str();
  } else {
    out.report.checks.push_back({"certificate", false, Json("inconclusive")});
    out.text = "refused: |z| is not below the minimum relator length\n";
  }
}

void cmd_claims_run(const RunConfig& cfg, RunOutcome& out, std::ostream* err) {
  require(cfg.n >= 2, "--n must be at least 2");
  std::vector<int> ids = cfg.claims;
  if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  for (int id : ids) require(id >= 1 && id <= 9, "claim ids run from 1 to 9");
  if (err) *err << "claims run: n=" << cfg.n << " L=" << cfg.L << " k_max=" << cfg.k_max << "\n";
  std::vector<ClaimReport> reps = run_claims(cfg.n, cfg.L, cfg.k_max, resolve_jobs(cfg), ids);
  Json rows = Json::array();
  std::ostringstream text;
  for (const ClaimReport& rep : reps) {
    Json row;
    row["claim_id"] = rep.claim_id;
    row["pairs_checked"] = rep.pairs_checked;
    Json viol = Json::array();
    for (const ClaimViolation& v : rep.violations) viol.push_back(violation_json(v));
    long long mismatches = 0, cells = 0;
    if (rep.claim_id == 6 || rep.claim_id == 7) {
      SignTableReport signs = verify_sign_tables(cfg.n, cfg.k_max, {rep.claim_id}).front();
      cells = signs.cells_checked;
      for (const SignTableCell& cell : signs.mismatches) {
        Json mis;
        mis["x"] = cell.word;
        mis["y"] = "";
        mis["rho"] = cell.op;
        mis["sigma"] = "";
        mis["piece"] = 0;
        mis["ratio"] = "";
        mis["detail"] = std::string("sign of ") + (cell.gen == 0 ? "a" : "b") + ": computed '" +
                        cell.computed + "', tabulated '" + cell.expected + "'";
        viol.push_back(std::move(mis));
        ++mismatches;
      }
      row["sign_cells_checked"] = cells;
      row["sign_mismatches"] = mismatches;
    }
    bool pass = viol.empty();
    row["violations"] = std::move(viol);
    row["elapsed_ms"] = rep.elapsed_ms;
    Json wit;
    if (!pass) wit = row["violations"].front();
    out.report.checks.push_back(
        {"claim-" + std::to_string(rep.claim_id), pass, pass ? Json() : wit});
    text << "claim " << rep.claim_id << ": " << (pass ? "PASS" : "FAIL")
         << "  pairs=" << rep.pairs_checked;
    if (cells) text << "  sign_cells=" << (cells - mismatches) << "/" << cells;
    if (!pass) text << "  violations=" << row["violations"].size();
    text << "\n";
    rows.push_back(std::move(row));
    if (err) *err << "claims run: claim " << rep.claim_id << " done\n";
  }
  out.report.summary["n"] = cfg.n;
  out.report.summary["L"] = cfg.L;
  out.report.summary["k_max"] = cfg.k_max;
  out.report.summary["claims"] = std::move(rows);
  out.text = text.str();
}

void cmd_irs_eval(const RunConfig& cfg, RunOutcome& out) {
  require(!cfg.instance.empty(), "irs eval requires --instance");
  require(!cfg.theta.empty(), "irs eval requires --theta");
  std::shared_ptr<GroupInstance> inst = parse_instance(cfg.instance);
  Theta theta = parse_theta(cfg.theta, *inst);
  std::vector<Element> F = parse_element_set(*inst, cfg.set);
  Rational v = theta_eval(*inst, theta, F);
  out.report.summary["instance"] = inst->name();
  out.report.summary["theta"] = theta.spec;
  out.report.summary["set"] = cfg.set;
  out.report.summary["value"] = rational_str(v);
  out.report.checks.push_back({"eval", true, Json(rational_str(v))});
  out.text = rational_str(v) + "\n";
}

void cmd_irs_coinduce(const RunConfig& cfg, RunOutcome& out) {
  require(!cfg.instance.empty(), "irs coinduce requires --instance");
  require(!cfg.theta.empty(), "irs coinduce requires --theta");
  std::shared_ptr<GroupInstance> inst = parse_instance(cfg.instance);
  Theta theta = parse_theta(cfg.theta, *inst);
  std::vector<Element> F = parse_element_set(*inst, cfg.set);
  CertifiedValue v = theta_coinduce(*inst, theta, F);
  out.report.summary["instance"] = inst->name();
  out.report.summary["theta"] = theta.spec;
  out.report.summary["set"] = cfg.set;
  out.report.summary["value"] = v.str();
  out.report.checks.push_back({"coinduce", true, Json(v.str())});
  out.text = v.str() + "\n";
}

void cmd_irs_nonatomic(const RunConfig& cfg, RunOutcome& out) {
  require(!cfg.instance.empty(), "irs nonatomic requires --instance");
  require(!cfg.theta.empty(), "irs nonatomic requires --theta");
  std::shared_ptr<GroupInstance> inst = parse_instance(cfg.instance);
  Theta theta = parse_theta(cfg.theta, *inst);
  std::optional<Element> candidate;
  if (!cfg.candidate.empty()) candidate = inst->parse_element(cfg.candidate);
  NonatomicityVerdict v = nonatomicity_verdict(*inst, theta, candidate);
  out.report.summary["instance"] = inst->name();
  out.report.summary["theta"] = theta.spec;
  std::string verdict, text;
  switch (v.kind) {
    case NonatomicityVerdict::Kind::NonAtomic:
      verdict = "non-atomic";
      text = "non-atomic; witness " + v.witness;
      break;
    case NonatomicityVerdict::Kind::DiracAtom:
      verdict = "atomic";
      text = "atomic: Dirac at " + v.atom;
      break;
    default:
      verdict = "inconclusive";
      text = "inconclusive: " + v.reason;
      break;
  }
  out.report.summary["verdict"] = verdict;
  if (!v.witness.empty()) out.report.summary["witness"] = v.witness;
  if (!v.atom.empty()) out.report.summary["atom"] = v.atom;
  if (!v.reason.empty()) out.report.summary["reason"] = v.reason;
  out.report.checks.push_back(
      {"verdict", v.kind != NonatomicityVerdict::Kind::Inconclusive, Json(verdict)});
  out.text = text + "\n";
}

void cmd_irs_grid(const RunConfig& cfg, RunOutcome& out) {
  require(!cfg.instance.empty(), "irs grid requires --instance");
  require(!cfg.grid.empty(), "irs grid requires --grid");
  std::shared_ptr<GroupInstance> inst = parse_instance(cfg.instance);
  std::vector<Rational> params;
  for (const std::string& tok : split_list(cfg.grid, ',')) params.push_back(parse_rational(tok));
  require(!params.empty(), "--grid is empty");
  DistinguishResult res = distinguish_family(*inst, params, cfg.weakmix, cfg.K);
  Json rows = Json::array();
  std::ostringstream text;
  for (const DistinguishRow& r : res.rows) {
    Json row;
    row["param"] = rational_str(r.param);
    row["value"] = r.value.str();
    rows.push_back(std::move(row));
    text << rational_str(r.param) << "  " << r.value.str() << "\n";
  }
  text << "pairwise distinct: " << (res.pairwise_distinct ? "yes" : "no") << "\n";
  out.report.summary["family"] = res.family;
  out.report.summary["rows"] = std::move(rows);
  out.report.summary["pairwise_distinct"] = res.pairwise_distinct;
  out.report.checks.push_back({"pairwise-distinct", res.pairwise_distinct, Json()});
  out.text = text.str();
}

void cmd_cocycle_check(const RunConfig& cfg, RunOutcome& out) {
  require(!cfg.instance.empty(), "cocycle check requires --instance");
  require(cfg.samples > 0, "--samples must be positive");
  std::shared_ptr<GroupInstance> inst = parse_instance(cfg.instance);
  std::string failure;
  bool ok = cocycle_identity_check(*inst, cfg.samples, cfg.seed, &failure);
  out.report.summary["instance"] = inst->name();
  out.report.summary["samples"] = cfg.samples;
  out.report.checks.push_back({"identity-law", ok, ok ? Json() : Json(failure)});
  std::ostringstream text;
  text << "identity law: " << (ok ? "PASS" : "FAIL") << " (" << cfg.samples << " samples)\n";
  if (!ok) text << "  " << failure << "\n";
  if (!cfg.inner.empty()) {
    std::shared_ptr<GroupInstance> inner = parse_instance(cfg.inner);
    std::string chain_failure;
    bool chain_ok = cocycle_chain_check(*inst, *inner, cfg.samples, cfg.seed, &chain_failure);
    out.report.summary["inner"] = inner->name();
    out.report.checks.push_back({"chain-rule", chain_ok, chain_ok ? Json() : Json(chain_failure)});
    text << "chain rule: " << (chain_ok ? "PASS" : "FAIL") << " (" << cfg.samples << " samples)\n";
    if (!chain_ok) text << "  " << chain_failure << "\n";
  }
  out.text = text.str();
}

}  // namespace

RunOutcome execute(const RunConfig& cfg, std::ostream* err) {
  RunOutcome out;
  out.report.command = cfg.command;
  out.report.config = config_json(cfg);
  out.report.started = iso_timestamp_now();
  auto t0 = std::chrono::steady_clock::now();

  if (cfg.command == "words reduce") cmd_words_reduce(cfg, out);
  else if (cfg.command == "auto apply") cmd_auto_apply(cfg, out);
  else if (cfg.command == "family build") cmd_family_build(cfg, out);
  else if (cfg.command == "sc check") cmd_sc_check(cfg, out, err);
  else if (cfg.command == "sc dehn") cmd_sc_dehn(cfg, out, err);
  else if (cfg.command == "sc certify") cmd_sc_certify(cfg, out, err);
  else if (cfg.command == "claims run") cmd_claims_run(cfg, out, err);
  else if (cfg.command == "irs eval") cmd_irs_eval(cfg, out);
  else if (cfg.command == "irs coinduce") cmd_irs_coinduce(cfg, out);
  else if (cfg.command == "irs nonatomic") cmd_irs_nonatomic(cfg, out);
  else if (cfg.command == "irs grid") cmd_irs_grid(cfg, out);
  else if (cfg.command == "cocycle check") cmd_cocycle_check(cfg, out);
  else throw std::invalid_argument("unknown command: " + cfg.command);

  out.report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
  out.exit_code = out.report.all_pass() ? 0 : 1;
  return out;
}

int run_and_emit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunOutcome outcome;
  try {
    outcome = execute(cfg, &err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  std::string rendered =
      cfg.format == "text" ? outcome.text : render_report(outcome.report, cfg.format);
  if (cfg.output.empty()) {
    out << rendered;
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "error: cannot write " << cfg.output << "\n";
      return 2;
    }
    file << rendered;
  }
  return outcome.exit_code;
}

}  // namespace cindkit
