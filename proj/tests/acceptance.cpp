// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include "cindkit/autf2.h"
#include "cindkit/family.h"
#include "cindkit/groups.h"
#include "cindkit/irs.h"
#include "cindkit/report.h"
#include "cindkit/runner.h"
#include "cindkit/smallcanc.h"
#include "cindkit/word.h"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cindkit;

namespace {

std::vector<Word> orbit_relators(int n, int L, bool exclude_identity) {
  Word base = family_base(n);
  std::vector<Endo> reps = transversal_R(L);
  std::vector<Word> out;
  for (std::size_t i = exclude_identity ? 1 : 0; i < reps.size(); ++i)
    out.push_back(reps[i].apply(base));
  return out;
}

Word random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<Letter> ls;
  int m = len(rng);
  for (int i = 0; i < m; ++i) ls.push_back(static_cast<Letter>(letter(rng)));
  return Word::from_letters(ls);
}

std::vector<Letter> random_letters(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<Letter> ls;
  int m = len(rng);
  for (int i = 0; i < m; ++i) ls.push_back(static_cast<Letter>(letter(rng)));
  return ls;
}

// ---- independent oracles for criterion 9 ------------------------------------

std::vector<Letter> naive_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> st;
  for (Letter c : in) {
    if (!st.empty() && st.back() == letter_inverse(c)) st.pop_back();
    else st.push_back(c);
  }
  return st;
}

std::vector<Letter> naive_cyclic_canonical(const std::vector<Letter>& in) {
  std::vector<Letter> r = naive_reduce(in);
  while (r.size() >= 2 && r.front() == letter_inverse(r.back())) {
    r.erase(r.begin());
    r.pop_back();
  }
  std::vector<Letter> best = r;
  for (std::size_t s = 1; s < r.size(); ++s) {
    std::vector<Letter> rot(r.begin() + s, r.end());
    rot.insert(rot.end(), r.begin(), r.begin() + s);
    if (rot < best) best = rot;
  }
  return best;
}

long long naive_common_cycle(const std::vector<Letter>& x, const std::vector<Letter>& y) {
  if (x.empty() || y.empty()) return 0;
  std::vector<Letter> dx = x, dy = y;
  dx.insert(dx.end(), x.begin(), x.end());
  dy.insert(dy.end(), y.begin(), y.end());
  long long cap = static_cast<long long>(std::min(x.size(), y.size()));
  std::vector<long long> prev(dy.size() + 1, 0), cur(dy.size() + 1, 0);
  long long best = 0;
  for (std::size_t i = 1; i <= dx.size(); ++i) {
    for (std::size_t j = 1; j <= dy.size(); ++j) {
      cur[j] = dx[i - 1] == dy[j - 1] ? prev[j - 1] + 1 : 0;
      best = std::max(best, std::min(cur[j], cap));
    }
    std::swap(prev, cur);
  }
  return best;
}

bool occurs_in_cycle(const std::vector<Letter>& needle, const std::vector<Letter>& cycle) {
  if (needle.empty()) return true;
  if (needle.size() > cycle.size()) return false;
  std::vector<Letter> doubled = cycle;
  doubled.insert(doubled.end(), cycle.begin(), cycle.end());
  return std::search(doubled.begin(), doubled.end(), needle.begin(), needle.end()) !=
         doubled.end();
}

// ---- criteria ----------------------------------------------------------------

bool criterion1(std::string& detail) {
  SymmetrizedSet set = SymmetrizedSet::symmetrize(orbit_relators(102, 3, false));
  CancellationCheck res = check_small_cancellation(set, Rational(1, 6));
  std::ostringstream os;
  os << set.size() << " classes, " << res.pairs_checked
     << " pairs, max ratio " << rational_str(res.worst.ratio);
  detail = os.str();
  return res.pass && res.worst.ratio < Rational(1, 6) && res.pairs_checked > 0;
}

bool criterion2(std::string& detail) {
  std::vector<SignTableReport> reports = verify_sign_tables(102, 3);
  long long cells = 0, mismatches = 0;
  bool ok = reports.size() == 2;
  for (const SignTableReport& r : reports) {
    cells += r.cells_checked;
    mismatches += static_cast<long long>(r.mismatches.size());
    ok = ok && r.cells_checked == 96 && r.mismatches.empty();
  }
  std::ostringstream os;
  os << cells << " cells, " << mismatches << " mismatches";
  detail = os.str();
  return ok;
}

bool criterion3(std::string& detail) {
  const int n = 102;
  std::vector<FamilyWord> fam = build_family(n);
  std::vector<Endo> rhos = enumerate_frplus(5);
  bool ok = true;
  long long bound_checks = 0, equality_checks = 0;
  for (const FamilyWord& z : fam)
    for (const Endo& rho : rhos) {
      LengthBoundCheck c = verify_length_lower_bound(rho, z);
      ok = ok && c.pass;
      ++bound_checks;
    }
  auto uniform_sign = [](const Word& w) {
    bool pos = false, neg = false;
    for (const Run& r : w.runs()) (r.exp > 0 ? pos : neg) = true;
    return !(pos && neg);
  };
  int uniform_words = 0;
  const long long half = static_cast<long long>(n) * (n + 1) / 2;
  for (const FamilyWord& z : fam) {
    if (!uniform_sign(z.word)) continue;
    ++uniform_words;
    for (const Endo& rho : rhos) {
      ok = ok && cyclic_length(rho.apply(z.word)) == half * growth(rho);
      ++equality_checks;
    }
  }
  ok = ok && uniform_words == 8;
  std::ostringstream os;
  os << bound_checks << " lower bounds, " << equality_checks << " exact lengths";
  detail = os.str();
  return ok;
}

bool criterion4(std::string& detail) {
  std::vector<Endo> rhos = enumerate_frplus(3);
  std::vector<FamilyWord> fam20 = build_family(20);
  bool ok = true;
  long long full = 0;
  for (std::size_t i = 0; i < fam20.size(); ++i)
    for (std::size_t j = i + 1; j < fam20.size(); ++j)
      for (const Endo& rho : rhos) {
        CancellationBoundCheck c = verify_cancellation_upper_bound(fam20[i], fam20[j], rho, true);
        ok = ok && c.pass_cap && c.pass_oracle;
        ++full;
      }
  std::vector<FamilyWord> fam102 = build_family(102);
  std::mt19937 rng(4102);
  std::uniform_int_distribution<std::size_t> pick(0, fam102.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_rho(0, rhos.size() - 1);
  for (int it = 0; it < 100; ++it) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      --it;
      continue;
    }
    CancellationBoundCheck c =
        verify_cancellation_upper_bound(fam102[i], fam102[j], rhos[pick_rho(rng)], false);
    ok = ok && c.pass_cap;
  }
  std::ostringstream os;
  os << full << " exhaustive at n=20, 100 sampled at n=102";
  detail = os.str();
  return ok;
}

bool criterion5(std::string& detail) {
  auto fp = parse_instance("freeprod:Z2,Z");
  Element c = fp->parse_element("[g0,h0]");
  bool ok = theta_coinduce(*fp, parse_theta("lambda:1/2", *fp), {c}).str() == "1/16";
  ok = ok && theta_coinduce(*fp, parse_theta("lambda:1/3", *fp), {c}).str() == "1/81";
  ok = ok &&
       theta_coinduce(*fp, parse_theta("lambda:1/2;weakmix", *fp), {c}).str() == "1/8503056";

  FreeProductKernel k26(2, 6);
  FpWord comm = k26.commutator(1, 1);
  std::set<std::pair<long long, long long>> hit;
  for (long long i = 0; i < 12; ++i) {
    Element moved = k26.conj(k26.transversal(i), Element(comm));
    BasisWord rw = schreier_rewrite(k26, std::get<FpWord>(moved));
    if (occurrence_count(rw, {1, 1}) > 0) hit.insert(k26.transversal_pair(i));
  }
  std::set<std::pair<long long, long long>> want = {{0, 0}, {0, 5}, {1, 0}, {1, 5}};
  ok = ok && hit == want;
  detail = "values 1/16, 1/81, 1/8503056; 4 contributing transversal pairs";
  return ok;
}

bool criterion6(std::string& detail) {
  auto inst = parse_instance("wreath:Z2,Z");
  Element lamp = dynamic_cast<const Wreath&>(*inst).delta_at(0, 1);
  bool ok = true;
  for (int n = 1; n <= 10; ++n) {
    Theta tn = parse_theta("mix:2^-n@trivial+rest@whole;n=" + std::to_string(n), *inst);
    ok = ok && theta_coinduce(*inst, tn, {lamp}).kind == CertifiedValue::Kind::ExactZero;
  }
  CertifiedValue dirac = theta_coinduce(*inst, parse_theta("dirac:whole", *inst), {lamp});
  ok = ok && dirac.definitely_equal(CertifiedValue::exact(Rational(1)));
  detail = "theta_1..theta_10 all 0, limit measure gives 1";
  return ok;
}

bool criterion7(std::string& detail) {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long long> mag(2, 40);
  std::uniform_int_distribution<int> flip(0, 1);
  bool ok = true;
  int done = 0;
  while (done < 20) {
    long long n = mag(rng) * (flip(rng) ? -1 : 1);
    long long m = mag(rng) * (flip(rng) ? -1 : 1);
    long long d = std::gcd(n, m);
    if (d <= 1) continue;
    BSWitness bs(n, m);
    ok = ok && bs.gcd() == d;
    ok = ok && bs.edge_closure().str() == std::to_string(d) + "Z";
    for (long long v = -3; v <= 3; ++v) {
      Tri has = bs.edge_closure().contains(Element(v * d));
      Tri lacks = bs.edge_closure().contains(Element(v * d + 1));
      ok = ok && has == Tri::Yes && (d == 1 || lacks == Tri::No);
    }
    Element g0 = bs.quotient().delta_at(0, 1);
    ok = ok && bs.chain_witness_verify(g0, 3, 1);
    ++done;
  }
  int coprime_done = 0;
  while (coprime_done < 5) {
    long long n = mag(rng), m = mag(rng);
    if (std::gcd(n, m) != 1) continue;
    BSWitness bs(n, m);
    ok = ok && bs.edge_closure().str() == "1Z";
    bool refused = false;
    try {
      bs.chain_subgroup(bs.quotient().identity(), 1);
    } catch (const std::runtime_error&) {
      refused = true;
    }
    ok = ok && refused && !bs.chain_witness_verify(bs.quotient().identity(), 3, 1);
    ++coprime_done;
  }
  detail = "20 non-coprime accepted, 5 coprime refused";
  return ok;
}

bool criterion8(std::string& detail) {
  SymmetrizedSet controls = SymmetrizedSet::symmetrize(orbit_relators(26, 0, false));
  CancellationCheck cc = check_small_cancellation(controls, Rational(1, 6));
  bool ok = cc.pass && controls.certified();
  std::mt19937 rng(2608);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, controls.size() - 1);
  int reduced = 0;
  for (int it = 0; it < 200; ++it) {
    Word prod(2);
    int parts = count(rng);
    for (int p = 0; p < parts; ++p) {
      const Word& rel = controls.members()[pick(rng)].base();
      prod = prod * conjugate(random_word(rng, 30), rel);
    }
    DehnResult res = dehn_reduce(prod, controls);
    bool good = res.reduced_to_identity && !res.heuristic_only &&
                verify_dehn_trace(prod, controls, res);
    ok = ok && good;
    if (good) ++reduced;
  }

  SymmetrizedSet excl = SymmetrizedSet::symmetrize(orbit_relators(102, 3, true));
  CancellationCheck cc2 = check_small_cancellation(excl, Rational(1, 6));
  ok = ok && cc2.pass;
  std::optional<LengthCertificate> cert = non_membership_certificate(family_base(102), excl);
  ok = ok && cert.has_value();
  long long staircase = 102LL * 103;
  if (cert) ok = ok && cert->z_length == staircase && cert->min_relator_length == staircase;
  std::ostringstream os;
  os << reduced << "/200 products reduced, certificate "
     << (cert ? "issued" : "refused");
  detail = os.str();
  return ok;
}

bool criterion9(std::string& detail) {
  std::mt19937 rng(9009);
  bool ok = true;
  for (int it = 0; it < 10000; ++it) {
    std::vector<Letter> ls = random_letters(rng, 60);
    ok = ok && Word::from_letters(ls).letters() == naive_reduce(ls);
  }
  for (int it = 0; it < 10000; ++it) {
    std::vector<Letter> ls = random_letters(rng, 40);
    ok = ok && CyclicWord(Word::from_letters(ls)).letters() == naive_cyclic_canonical(ls);
  }
  int compared = 0;
  while (compared < 10000) {
    CyclicWord x(Word::from_letters(random_letters(rng, 20)));
    CyclicWord y(Word::from_letters(random_letters(rng, 20)));
    if (x.is_identity() || y.is_identity() || x == y) continue;
    CommonSubstring got = max_common_cyclic_substring(x, y);
    ok = ok && got.length == naive_common_cycle(x.letters(), y.letters());
    std::vector<Letter> wit = got.witness.letters();
    ok = ok && static_cast<long long>(wit.size()) == got.length;
    ok = ok && occurs_in_cycle(wit, x.letters()) && occurs_in_cycle(wit, y.letters());
    ++compared;
  }
  detail = "3 x 10^4 oracle comparisons";
  return ok;
}

bool criterion10(std::string& detail) {
  std::string why;
  IntegerChain outer(2, 1), inner(2, 2);
  bool ok = cocycle_identity_check(outer, 1000, 10, &why);
  ok = ok && cocycle_identity_check(inner, 1000, 11, &why);
  ok = ok && cocycle_chain_check(outer, inner, 1000, 12, &why);
  Wreath wouter(2, EnumOrder::Std, 1, 2), winner(2, EnumOrder::Std, 2, 0);
  ok = ok && cocycle_identity_check(wouter, 1000, 13, &why);
  ok = ok && cocycle_identity_check(winner, 1000, 14, &why);
  ok = ok && cocycle_chain_check(wouter, winner, 1000, 15, &why);
  detail = ok ? "10^3 samples per law, both towers" : why;
  return ok;
}

bool criterion11(std::string& detail) {
  auto stable = [](const RunConfig& cfg) {
    RunOutcome a = execute(cfg);
    RunOutcome b = execute(cfg);
    return strip_volatile(a.report.to_json()).dump() ==
           strip_volatile(b.report.to_json()).dump();
  };
  bool ok = true;
  int commands = 0;

  RunConfig sc;
  sc.command = "sc check";
  sc.n = 8;
  sc.L = 0;
  ok = ok && stable(sc), ++commands;

  RunConfig dehn;
  dehn.command = "sc dehn";
  dehn.n = 26;
  dehn.L = 0;
  dehn.word = "a b a^2 b^2";
  ok = ok && stable(dehn), ++commands;

  RunConfig cl;
  cl.command = "claims run";
  cl.n = 8;
  cl.L = 0;
  cl.k_max = 1;
  cl.claims = {1, 6};
  ok = ok && stable(cl), ++commands;

  RunConfig fam;
  fam.command = "family build";
  fam.n = 8;
  ok = ok && stable(fam), ++commands;

  RunConfig coin;
  coin.command = "irs coinduce";
  coin.instance = "wreath:Z2,Z";
  coin.theta = "chain:2^-k-1;K=6";
  coin.set = "[0:1];0";
  ok = ok && stable(coin), ++commands;

  RunConfig grid;
  grid.command = "irs grid";
  grid.instance = "freeprod:Z2,Z";
  grid.grid = "1/2,1/3";
  ok = ok && stable(grid), ++commands;

  RunConfig coc;
  coc.command = "cocycle check";
  coc.instance = "intchain:2";
  coc.inner = "intchain:2;stride=2";
  coc.samples = 200;
  coc.seed = 5;
  ok = ok && stable(coc), ++commands;

  std::ostringstream os;
  os << commands << " commands, stripped reports byte-identical";
  detail = os.str();
  return ok;
}

}  // namespace

int main() {
  struct Row {
    int id;
    bool (*run)(std::string&);
  };
  const Row rows[] = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
      {9, criterion9}, {10, criterion10}, {11, criterion11},
  };
  int failures = 0;
  for (const Row& row : rows) {
    std::string detail;
    bool pass = false;
    try {
      pass = row.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << row.id << ": " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
