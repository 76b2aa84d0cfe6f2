#include "cindkit/family.h"

#include "cindkit/cyclic_match.h"
#include "cindkit/parallel.h"
#include "cindkit/rational.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace cindkit {
namespace {

constexpr int kGenA = 0;
constexpr int kGenB = 1;

Word staircase(int n, int g1, int s1, int g2, int s2) {
  std::vector<Run> runs;
  runs.reserve(2 * n);
  for (int m = 1; m <= n; ++m) {
    runs.push_back({g1, static_cast<long long>(s1) * m});
    runs.push_back({g2, static_cast<long long>(s2) * m});
  }
  return Word(2, std::move(runs));
}

struct Shape {
  int g1, s1, g2, s2;
  const char* prov;  // defining automorphism, leftmost applied last
};

// w_i = op_i(w_0) and, in closed form, the alternating staircase below.
constexpr Shape kShapes[8] = {
    {kGenA, +1, kGenB, +1, "1"},
    {kGenA, -1, kGenB, -1, "xi chi"},
    {kGenA, -1, kGenB, +1, "xi"},
    {kGenA, +1, kGenB, -1, "chi"},
    {kGenB, +1, kGenA, +1, "tau"},
    {kGenB, -1, kGenA, -1, "tau xi chi"},
    {kGenB, -1, kGenA, +1, "tau xi"},
    {kGenB, +1, kGenA, -1, "tau chi"},
};

std::vector<Letter> doubled(const std::vector<Letter>& s) {
  std::vector<Letter> d(s);
  d.insert(d.end(), s.begin(), s.end());
  return d;
}

}  // namespace

Word family_base(int n) { return staircase(n, kGenA, +1, kGenB, +1); }

std::vector<FamilyWord> build_family(int n) {
  if (n < 2) throw std::invalid_argument("family requires n >= 2");
  Word base = family_base(n);
  std::vector<FamilyWord> fam;
  fam.reserve(16);
  for (int i = 0; i < 8; ++i) {
    const Shape& sh = kShapes[i];
    Word formula = staircase(n, sh.g1, sh.s1, sh.g2, sh.s2);
    Word image = parse_provenance(sh.prov).apply(base);
    if (!(formula == image))
      throw std::logic_error("family formula disagrees with automorphism image for w" +
                             std::to_string(i));
    fam.push_back({i, false, n, std::move(formula)});
  }
  for (int i = 0; i < 8; ++i) fam.push_back({i, true, n, fam[i].word.inverse()});
  return fam;
}

std::vector<Word> family_blocks(int i, int n) {
  std::vector<Word> blocks;
  blocks.reserve(n);
  auto push = [&](int g1, long long e1, int g2, long long e2) {
    blocks.push_back(Word(2, {{g1, e1}, {g2, e2}}));
  };
  for (int m = 1; m <= n; ++m) {
    switch (i) {
      case 0: push(kGenA, m, kGenB, m); break;
      case 1: push(kGenA, -m, kGenB, -m); break;
      case 3: push(kGenA, m, kGenB, -m); break;
      case 4: push(kGenB, m, kGenA, m); break;
      case 5: push(kGenB, -m, kGenA, -m); break;
      case 7: push(kGenB, m, kGenA, -m); break;
      case 2:
        // shifted decomposition: the leading a^-1 wraps to the final block
        if (m < n)
          push(kGenB, m, kGenA, -(m + 1));
        else
          push(kGenB, n, kGenA, -1);
        break;
      case 6:
        if (m < n)
          push(kGenA, m, kGenB, -(m + 1));
        else
          push(kGenA, n, kGenB, -1);
        break;
      default:
        throw std::invalid_argument("block index out of range");
    }
  }
  return blocks;
}

LengthBoundCheck verify_length_lower_bound(const Endo& rho, const FamilyWord& z) {
  LengthBoundCheck out;
  out.lhs = cyclic_length(rho.apply(z.word));
  long long n = z.n;
  out.rhs = (n * (n - 1) / 2 - 2 * n) * growth(rho);
  out.pass = out.lhs >= out.rhs;
  return out;
}

CancellationBoundCheck verify_cancellation_upper_bound(const FamilyWord& x, const FamilyWord& y,
                                                       const Endo& rho, bool with_oracle) {
  CancellationBoundCheck out;
  CyclicWord cx(rho.apply(x.word)), cy(rho.apply(y.word));
  if (cx == cy) throw std::invalid_argument("cancellation bound needs distinct image cycles");
  out.actual = common_cycle_length(cx.letters(), cy.letters(), 4);
  long long n = x.n;
  out.cap_n = 2 * n - 2;
  out.cap_bound = (out.cap_n + 2) * growth(rho);
  out.pass_cap = out.actual <= out.cap_bound;
  if (with_oracle) {
    // True cancellation constant of the base pair: over every common cyclic
    // substring, the larger of its a-count and b-count.
    std::vector<Letter> X = doubled(CyclicWord(x.word).letters());
    std::vector<Letter> Y = doubled(CyclicWord(y.word).letters());
    long long lx = static_cast<long long>(X.size()) / 2;
    long long ly = static_cast<long long>(Y.size()) / 2;
    std::vector<long long> pa(X.size() + 1, 0), pb(X.size() + 1, 0);
    for (std::size_t i = 0; i < X.size(); ++i) {
      pa[i + 1] = pa[i] + (letter_gen(X[i]) == kGenA ? 1 : 0);
      pb[i + 1] = pb[i] + (letter_gen(X[i]) == kGenB ? 1 : 0);
    }
    long long cap = std::min(lx, ly);
    long long best = 0;
    std::vector<long long> prev(Y.size(), 0), cur(Y.size(), 0);
    for (std::size_t i = 0; i < X.size(); ++i) {
      for (std::size_t j = 0; j < Y.size(); ++j) {
        long long run = 0;
        if (X[i] == Y[j]) run = (i && j) ? prev[j - 1] + 1 : 1;
        cur[j] = run;
        long long l = std::min(run, cap);
        if (l > 0) {
          long long ca = pa[i + 1] - pa[i + 1 - l];
          long long cb = pb[i + 1] - pb[i + 1 - l];
          best = std::max(best, std::max(ca, cb));
        }
      }
      std::swap(prev, cur);
    }
    out.oracle_run = true;
    out.oracle_n = best;
    out.oracle_bound = (best + 2) * growth(rho);
    out.pass_oracle = out.actual <= out.oracle_bound;
  }
  return out;
}

char sign_table_entry(const Endo& op, const FamilyWord& z, int gen) {
  switch (sign_profile(op.apply(z.word), gen)) {
    case SignProfile::AllPositive:
      return '+';
    case SignProfile::AllNegative:
      return '-';
    case SignProfile::Mixed:
      throw std::logic_error("sign table entry is mixed for " + z.name());
    default:
      throw std::logic_error("sign table entry is absent for " + z.name());
  }
}

namespace {

// Tabulated sign rows over w0..w7, v0..v7; constant in the exponent.
constexpr const char* kSignAPhi = "+--++-+--++--+-+";
constexpr const char* kSignAXiPhi = "-++--+-++--++-+-";
constexpr const char* kSignBPsi = "+-+-+--+-+-+-++-";
constexpr const char* kSignBXiPsi = "+-+-+--+-+-+-++-";

Endo iterate(const Endo& f, int k) {
  Endo acc;
  for (int i = 0; i < k; ++i) acc = compose(acc, f);
  return acc;
}

}  // namespace

std::vector<SignTableReport> verify_sign_tables(int n, int k_max, std::vector<int> claim_ids) {
  std::vector<FamilyWord> family = build_family(n);
  std::vector<SignTableReport> out;
  for (int claim : claim_ids) {
    if (claim != 6 && claim != 7) throw std::invalid_argument("no sign table for this claim");
    Endo base = claim == 6 ? aut_phi() : aut_psi();
    int gen = claim == 6 ? kGenA : kGenB;
    const char* plain = claim == 6 ? kSignAPhi : kSignBPsi;
    const char* twisted = claim == 6 ? kSignAXiPhi : kSignBXiPsi;
    SignTableReport rep;
    rep.claim_id = claim;
    for (int k = 1; k <= k_max; ++k) {
      std::array<std::pair<Endo, const char*>, 2> rows = {
          std::make_pair(iterate(base, k), plain),
          std::make_pair(compose(aut_xi(), iterate(base, k)), twisted)};
      for (const auto& [op, expected] : rows) {
        for (std::size_t i = 0; i < family.size(); ++i) {
          SignTableCell cell;
          cell.op = op.provenance_str();
          cell.word = family[i].name();
          cell.gen = gen;
          cell.expected = expected[i];
          try {
            cell.computed = sign_table_entry(op, family[i], gen);
          } catch (const std::logic_error&) {
            cell.computed = '!';
          }
          cell.match = cell.computed == cell.expected;
          ++rep.cells_checked;
          if (!cell.match) rep.mismatches.push_back(std::move(cell));
        }
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

namespace {

// Shared state for the claim checks: operator registry, image-cycle cache and
// the grouped suffix-automaton pair sweep.
class ClaimEngine {
 public:
  ClaimEngine(int n, int L, int k_max, unsigned jobs)
      : n_(n), max_len_(L), k_max_(k_max), jobs_(jobs), family_(build_family(n)) {
    frplus_ = enumerate_frplus(L);
    for (std::size_t i = 0; i < frplus_.size(); ++i)
      if (classify(frplus_[i]).cls == FrClass::A1) a1_.push_back(static_cast<int>(i));
    for (int i = 0; i < 8; ++i) blocks_.push_back(family_blocks(i, n));
  }

  ClaimReport run(int claim_id) {
    auto t0 = std::chrono::steady_clock::now();
    ClaimReport rep;
    rep.claim_id = claim_id;
    std::vector<std::pair<int, int>> tasks;
    switch (claim_id) {
      case 1: build1(tasks); break;
      case 2: build2(tasks); break;
      case 3: build3(tasks); structural3(rep.violations); break;
      case 4: build4(tasks); break;
      case 5: build5(tasks); break;
      case 6: build67(tasks, AutSym::Phi); structural67(AutSym::Phi, kGenA, rep.violations); break;
      case 7: build67(tasks, AutSym::Psi); structural67(AutSym::Psi, kGenB, rep.violations); break;
      case 8: build8(tasks); structural8(rep.violations); break;
      case 9: build9(tasks); break;
      default: throw std::invalid_argument("claim id out of range");
    }
    rep.pairs_checked = static_cast<long long>(tasks.size());
    sweep(tasks, rep.violations);
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
  }

 private:
  int n_, max_len_, k_max_;
  unsigned jobs_;
  std::vector<FamilyWord> family_;
  std::vector<Endo> frplus_;
  std::vector<int> a1_;  // indices into frplus_
  std::vector<std::vector<Word>> blocks_;

  std::vector<Endo> ops_;
  std::vector<std::string> op_names_;
  std::map<std::string, int> op_by_name_;
  std::map<std::pair<int, int>, int> cyc_by_key_;
  std::vector<std::vector<Letter>> cycles_;
  std::vector<int> cyc_op_, cyc_wd_;

  int op_id(const Endo& f) {
    std::string key = f.provenance_str();
    auto it = op_by_name_.find(key);
    if (it != op_by_name_.end()) return it->second;
    int id = static_cast<int>(ops_.size());
    ops_.push_back(f);
    op_names_.push_back(key);
    op_by_name_.emplace(std::move(key), id);
    return id;
  }

  int cycle_id(int op, int wd) {
    auto it = cyc_by_key_.find({op, wd});
    if (it != cyc_by_key_.end()) return it->second;
    int id = static_cast<int>(cycles_.size());
    cycles_.push_back(CyclicWord(ops_[op].apply(family_[wd].word)).letters());
    cyc_op_.push_back(op);
    cyc_wd_.push_back(wd);
    cyc_by_key_.emplace(std::make_pair(op, wd), id);
    return id;
  }

  Endo prefix_op(const Endo& f, std::size_t len) const {
    Endo acc;
    for (std::size_t i = 0; i < len; ++i) acc = compose(acc, elementary(f.provenance()[i]));
    return acc;
  }

  static Endo power(AutSym s, int k) {
    Endo acc;
    for (int i = 0; i < k; ++i) acc = compose(acc, elementary(s));
    return acc;
  }

  static bool mentions(const Endo& f, AutSym s) {
    const auto& p = f.provenance();
    return std::find(p.begin(), p.end(), s) != p.end();
  }

  void add_pairs(std::vector<std::pair<int, int>>& tasks, std::set<std::pair<int, int>>& seen,
                 int lcyc, int rcyc) {
    if (lcyc == rcyc) return;  // same word on both sides, not a pair
    auto key = std::minmax(lcyc, rcyc);
    if (!seen.insert(key).second) return;
    tasks.emplace_back(lcyc, rcyc);
  }

  // claim 1: rho(x) vs rho(y), same rho, distinct family words
  void build1(std::vector<std::pair<int, int>>& tasks) {
    std::set<std::pair<int, int>> seen;
    for (const Endo& f : frplus_) {
      int op = op_id(f);
      for (int x = 0; x < 16; ++x)
        for (int y = x + 1; y < 16; ++y) add_pairs(tasks, seen, cycle_id(op, x), cycle_id(op, y));
    }
  }

  // claim 2: rho = eta sigma with sigma != 1; rho(x) vs eta(y)
  void build2(std::vector<std::pair<int, int>>& tasks) {
    std::set<std::pair<int, int>> seen;
    for (const Endo& f : frplus_) {
      if (f.provenance().empty()) continue;
      int fop = op_id(f);
      for (std::size_t j = 0; j < f.provenance().size(); ++j) {
        int eop = op_id(prefix_op(f, j));
        for (int x = 0; x < 16; ++x)
          for (int y = 0; y < 16; ++y) add_pairs(tasks, seen, cycle_id(fop, x), cycle_id(eop, y));
      }
    }
  }

  // claim 3: rho1 mentions phi, rho2 mentions psi
  void build3(std::vector<std::pair<int, int>>& tasks) {
    std::set<std::pair<int, int>> seen;
    for (const Endo& f : frplus_) {
      if (!mentions(f, AutSym::Phi)) continue;
      int fop = op_id(f);
      for (const Endo& g : frplus_) {
        if (!mentions(g, AutSym::Psi)) continue;
        int gop = op_id(g);
        for (int x = 0; x < 16; ++x)
          for (int y = 0; y < 16; ++y) add_pairs(tasks, seen, cycle_id(fop, x), cycle_id(gop, y));
      }
    }
  }

  // claim 4: x vs xi sigma(y), sigma != 1
  void build4(std::vector<std::pair<int, int>>& tasks) {
    std::set<std::pair<int, int>> seen;
    int unit = op_id(Endo());
    for (const Endo& g : frplus_) {
      if (g.provenance().empty()) continue;
      int rop = op_id(compose(aut_xi(), g));
      for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y) add_pairs(tasks, seen, cycle_id(unit, x), cycle_id(rop, y));
    }
  }

  // claim 5: rho(x) vs xi sigma(y) with differing leftmost symbols
  void build5(std::vector<std::pair<int, int>>& tasks) {
    std::set<std::pair<int, int>> seen;
    for (const Endo& f : frplus_) {
      if (f.provenance().empty()) continue;
      int fop = op_id(f);
      for (const Endo& g : frplus_) {
        if (g.provenance().empty() || g.provenance().front() == f.provenance().front()) continue;
        int rop = op_id(compose(aut_xi(), g));
        for (int x = 0; x < 16; ++x)
          for (int y = 0; y < 16; ++y) add_pairs(tasks, seen, cycle_id(fop, x), cycle_id(rop, y));
      }
    }
  }

  // claims 6/7: s^k(x) vs xi s^l(y) for a single symbol s
  void build67(std::vector<std::pair<int, int>>& tasks, AutSym s) {
    std::set<std::pair<int, int>> seen;
    for (int k = 1; k <= k_max_; ++k) {
      int fop = op_id(power(s, k));
      for (int l = 1; l <= k_max_; ++l) {
        int rop = op_id(compose(aut_xi(), power(s, l)));
        for (int x = 0; x < 16; ++x)
          for (int y = 0; y < 16; ++y) add_pairs(tasks, seen, cycle_id(fop, x), cycle_id(rop, y));
      }
    }
  }

  // claim 8: rho(x) vs xi sigma(y), both operators mixed
  void build8(std::vector<std::pair<int, int>>& tasks) {
    std::set<std::pair<int, int>> seen;
    for (int fi : a1_) {
      int fop = op_id(frplus_[fi]);
      for (int gi : a1_) {
        int rop = op_id(compose(aut_xi(), frplus_[gi]));
        for (int x = 0; x < 16; ++x)
          for (int y = 0; y < 16; ++y) add_pairs(tasks, seen, cycle_id(fop, x), cycle_id(rop, y));
      }
    }
  }

  // claim 9: rho mixed vs xi s^k with matching leftmost symbol
  void build9(std::vector<std::pair<int, int>>& tasks) {
    std::set<std::pair<int, int>> seen;
    int kk = std::max(max_len_, k_max_);
    for (int fi : a1_) {
      const Endo& f = frplus_[fi];
      int fop = op_id(f);
      AutSym s = f.provenance().front();
      for (int k = 1; k <= kk; ++k) {
        int rop = op_id(compose(aut_xi(), power(s, k)));
        for (int x = 0; x < 16; ++x)
          for (int y = 0; y < 16; ++y) add_pairs(tasks, seen, cycle_id(fop, x), cycle_id(rop, y));
      }
    }
  }

  // claim 3 string assertion: past the leading blocks, images under a
  // phi-leading operator keep a b-run of height >= 2 (psi-leading: a-run).
  void structural3(std::vector<ClaimViolation>& out) {
    for (const Endo& f : frplus_) {
      if (f.provenance().empty()) continue;
      int gen = f.provenance().front() == AutSym::Phi ? kGenB : kGenA;
      for (int i = 0; i < 8; ++i) {
        for (int m = 3; m <= n_ - 1; ++m) {
          Word img = f.apply(blocks_[i][m - 1]);
          bool found = false;
          for (const Run& r : img.runs())
            if (r.gen == gen && std::abs(r.exp) >= 2) { found = true; break; }
          if (!found) {
            ClaimViolation v;
            v.x = "w" + std::to_string(i) + "^" + std::to_string(m);
            v.rho = f.provenance_str();
            v.detail = std::string("no run of ") + (gen == kGenB ? "b" : "a") +
                       " with height >= 2 in block image";
            out.push_back(std::move(v));
          }
        }
      }
    }
  }

  // claims 6/7 string assertion: with s the sign of `gen` in z, the square of
  // op(gen^s) occurs in every middle block image (inverted for the v words).
  void structural67(AutSym s, int gen, std::vector<ClaimViolation>& out) {
    std::vector<Endo> ops;
    for (int k = 1; k <= k_max_; ++k) ops.push_back(power(s, k));
    for (int l = 1; l <= k_max_; ++l) ops.push_back(compose(aut_xi(), power(s, l)));
    for (const Endo& op : ops) {
      for (const FamilyWord& z : family_) {
        SignProfile prof = sign_profile(z.word, gen);
        if (prof != SignProfile::AllPositive && prof != SignProfile::AllNegative) {
          ClaimViolation v;
          v.x = z.name();
          v.rho = op.provenance_str();
          v.detail = std::string("sign of ") + (gen == kGenA ? "a" : "b") + " is " +
                     sign_profile_name(prof);
          out.push_back(std::move(v));
          continue;
        }
        Word t = op.apply(Word::generator_power(gen, prof == SignProfile::AllPositive ? 1 : -1));
        std::vector<Letter> target = (t * t).letters();
        for (int m = 3; m <= n_ - 1; ++m) {
          Word img = op.apply(blocks_[z.index][m - 1]);
          if (z.inverted) img = img.inverse();
          std::vector<Letter> ls = img.letters();
          if (std::search(ls.begin(), ls.end(), target.begin(), target.end()) == ls.end()) {
            ClaimViolation v;
            v.x = z.name() + "^" + std::to_string(m);
            v.rho = op.provenance_str();
            v.detail = "missing structural square " + (t * t).str();
            out.push_back(std::move(v));
          }
        }
      }
    }
  }

  static int mixed_sandwich_count(const Word& base) {
    std::vector<Run> runs = base.runs();
    if (runs.size() >= 2 && runs.front().gen == runs.back().gen) {
      runs.front().exp += runs.back().exp;
      runs.pop_back();
    }
    int k = static_cast<int>(runs.size());
    int count = 0;
    for (int j = 0; j < k; ++j) {
      const Run& r = runs[j];
      const Run& p = runs[(j + k - 1) % k];
      const Run& q = runs[(j + 1) % k];
      if (p.gen != q.gen || p.gen == r.gen) continue;
      bool sandwich = (r.exp > 0) ? (p.exp < 0 && q.exp < 0) : (p.exp > 0 && q.exp > 0);
      if (sandwich) ++count;
    }
    return count;
  }

  static bool has_uniform_sandwich(const Word& w) {
    const auto& runs = w.runs();
    for (std::size_t j = 1; j + 1 < runs.size(); ++j) {
      const Run& r = runs[j];
      const Run& p = runs[j - 1];
      const Run& q = runs[j + 1];
      if (p.gen != q.gen || p.gen == r.gen) continue;
      bool same = (r.exp > 0) == (p.exp > 0) && (p.exp > 0) == (q.exp > 0);
      if (same) return true;
    }
    return false;
  }

  // claim 8 string assertions: each cycle rho(z) carries at most one
  // opposite-sign sandwich, and every middle block image carries a same-sign
  // sandwich.
  void structural8(std::vector<ClaimViolation>& out) {
    for (int fi : a1_) {
      const Endo& f = frplus_[fi];
      for (const FamilyWord& z : family_) {
        CyclicWord cyc(f.apply(z.word));
        int count = mixed_sandwich_count(cyc.base());
        if (count > 1) {
          ClaimViolation v;
          v.x = z.name();
          v.rho = f.provenance_str();
          v.detail = "cycle has " + std::to_string(count) + " opposite-sign sandwiches";
          out.push_back(std::move(v));
        }
      }
      for (int i = 0; i < 8; ++i) {
        for (int m = 2; m <= n_ - 1; ++m) {
          if (!has_uniform_sandwich(f.apply(blocks_[i][m - 1]))) {
            ClaimViolation v;
            v.x = "w" + std::to_string(i) + "^" + std::to_string(m);
            v.rho = f.provenance_str();
            v.detail = "block image has no same-sign sandwich";
            out.push_back(std::move(v));
          }
        }
      }
    }
  }

  void sweep(const std::vector<std::pair<int, int>>& tasks, std::vector<ClaimViolation>& out) {
    std::vector<int> lefts;
    std::vector<std::vector<int>> grouped;
    std::unordered_map<int, int> gi;
    for (const auto& t : tasks) {
      auto it = gi.find(t.first);
      int g;
      if (it == gi.end()) {
        g = static_cast<int>(lefts.size());
        gi.emplace(t.first, g);
        lefts.push_back(t.first);
        grouped.emplace_back();
      } else {
        g = it->second;
      }
      grouped[g].push_back(t.second);
    }
    std::vector<std::vector<ClaimViolation>> slots(lefts.size());
    parallel_for(lefts.size(), jobs_, [&](std::size_t g) {
      const std::vector<Letter>& lhs = cycles_[lefts[g]];
      SuffixAutomaton sam(4);
      sam.build(doubled(lhs));
      for (int rc : grouped[g]) {
        const std::vector<Letter>& rhs = cycles_[rc];
        ClaimViolation v;
        v.x = family_[cyc_wd_[lefts[g]]].name();
        v.y = family_[cyc_wd_[rc]].name();
        v.rho = op_names_[cyc_op_[lefts[g]]];
        v.sigma = op_names_[cyc_op_[rc]];
        if (lhs == rhs) {
          v.detail = "coincident image cycles";
          slots[g].push_back(std::move(v));
          continue;
        }
        long long cap = std::min<long long>(lhs.size(), rhs.size());
        long long piece = std::min(sam.longest_match(doubled(rhs)), cap);
        if (6 * piece >= cap) {
          v.piece = piece;
          v.ratio = rational_str(Rational(Integer(piece), Integer(cap)));
          v.detail =
              "piece " + Word::from_letters(common_cycle_witness(lhs, rhs, 4, piece)).str();
          slots[g].push_back(std::move(v));
        }
      }
    });
    for (auto& s : slots) out.insert(out.end(), std::make_move_iterator(s.begin()),
                                     std::make_move_iterator(s.end()));
  }
};

}  // namespace

std::vector<ClaimReport> run_claims(int n, int L, int k_max, unsigned jobs,
                                    std::vector<int> claim_ids) {
  if (claim_ids.empty()) claim_ids = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  ClaimEngine engine(n, L, k_max, jobs);
  std::vector<ClaimReport> out;
  out.reserve(claim_ids.size());
  for (int c : claim_ids) out.push_back(engine.run(c));
  return out;
}

}  // namespace cindkit
