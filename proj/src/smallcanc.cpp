#include "cindkit/smallcanc.h"

#include "cindkit/cyclic_match.h"
#include "cindkit/parallel.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cindkit {
namespace {

std::vector<Letter> doubled(const std::vector<Letter>& s) {
  std::vector<Letter> d(s);
  d.insert(d.end(), s.begin(), s.end());
  return d;
}

}  // namespace

SymmetrizedSet SymmetrizedSet::symmetrize(const std::vector<Word>& words) {
  SymmetrizedSet out;
  std::map<CyclicWord, std::size_t> seen;
  for (std::size_t i = 0; i < words.size(); ++i) {
    CyclicWord cyc(words[i]);
    if (cyc.is_identity())
      throw std::invalid_argument("identity relator at position " + std::to_string(i));
    for (bool inverted : {false, true}) {
      CyclicWord member = inverted ? cyc.inverse() : cyc;
      if (seen.emplace(member, out.members_.size()).second) {
        out.members_.push_back(std::move(member));
        out.origins_.push_back({i, inverted});
      }
    }
  }
  return out;
}

bool SymmetrizedSet::contains(const CyclicWord& c) const {
  return std::find(members_.begin(), members_.end(), c) != members_.end();
}

long long SymmetrizedSet::min_length() const {
  long long best = 0;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (i == 0 || members_[i].length() < best) best = members_[i].length();
  return best;
}

CancellationCheck check_small_cancellation(SymmetrizedSet& set, const Rational& lambda,
                                           unsigned jobs) {
  CancellationCheck out;
  out.lambda = lambda;
  const auto& members = set.members();
  std::size_t m = members.size();
  std::vector<std::vector<Letter>> letters(m);
  for (std::size_t i = 0; i < m; ++i) letters[i] = members[i].letters();

  struct LeftBest {
    bool any = false;
    bool all_pass = true;
    std::size_t j = 0;
    long long piece = 0;
    Rational ratio;
    long long pairs = 0;
  };
  std::vector<LeftBest> best(m);
  parallel_for(m, jobs, [&](std::size_t i) {
    if (i + 1 >= m) return;
    SuffixAutomaton sam(4);
    sam.build(doubled(letters[i]));
    LeftBest acc;
    for (std::size_t j = i + 1; j < m; ++j) {
      long long cap = std::min<long long>(letters[i].size(), letters[j].size());
      long long piece = std::min(sam.longest_match(doubled(letters[j])), cap);
      Rational ratio = piece == 0 ? Rational(0) : Rational(Integer(piece), Integer(cap));
      ++acc.pairs;
      if (ratio >= lambda) acc.all_pass = false;
      if (!acc.any || ratio > acc.ratio) {
        acc.any = true;
        acc.j = j;
        acc.piece = piece;
        acc.ratio = ratio;
      }
    }
    best[i] = std::move(acc);
  });

  bool have_worst = false;
  for (std::size_t i = 0; i < m; ++i) {
    out.pairs_checked += best[i].pairs;
    if (!best[i].all_pass) out.pass = false;
    if (best[i].any && (!have_worst || best[i].ratio > out.worst.ratio)) {
      have_worst = true;
      out.worst.x = i;
      out.worst.y = best[i].j;
      out.worst.piece_length = best[i].piece;
      out.worst.ratio = best[i].ratio;
    }
  }
  if (have_worst && out.worst.piece_length > 0)
    out.worst.witness = Word::from_letters(common_cycle_witness(
        letters[out.worst.x], letters[out.worst.y], 4, out.worst.piece_length));
  out.worst.pass = out.worst.ratio < lambda;
  if (out.pass && lambda <= Rational(1, 6)) set.mark_certified(true);
  return out;
}

DehnResult dehn_reduce(const Word& z, const SymmetrizedSet& relators) {
  DehnResult out;
  out.heuristic_only = !relators.certified();
  const auto& members = relators.members();
  std::vector<std::vector<Letter>> rel(members.size());
  std::vector<SuffixAutomaton> sams;
  sams.reserve(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    rel[k] = members[k].letters();
    sams.emplace_back(4);
    sams.back().build(doubled(rel[k]));
  }

  Word cur = CyclicWord(z).base();
  while (!cur.is_identity()) {
    std::vector<Letter> zl = cur.letters();
    std::vector<Letter> z2 = doubled(zl);
    long long zlen = static_cast<long long>(zl.size());

    std::size_t best_k = members.size();
    long long best_len = 0, best_end = -1;
    for (std::size_t k = 0; k < members.size(); ++k) {
      long long rlen = static_cast<long long>(rel[k].size());
      long long cap = std::min(zlen, rlen);
      long long len = std::min(sams[k].longest_match(z2), cap);
      if (2 * len <= rlen || len <= best_len) continue;
      for (const auto& match : sams[k].matches_of_length(z2, len)) {
        long long start = match.end - len + 1;
        if (start >= 0 && start < zlen) {
          best_k = k;
          best_len = len;
          best_end = match.end;
          break;
        }
      }
    }
    if (best_k == members.size()) break;

    long long start = best_end - best_len + 1;
    std::vector<Letter> matched(z2.begin() + start, z2.begin() + best_end + 1);
    std::vector<Letter> rest(z2.begin() + best_end + 1, z2.begin() + start + zlen);
    std::vector<Letter> r2 = doubled(rel[best_k]);
    auto at = std::search(r2.begin(), r2.end(), matched.begin(), matched.end());
    if (at == r2.end()) throw std::logic_error("matched subword missing from relator");
    long long t = at - r2.begin();
    std::vector<Letter> complement(r2.begin() + t + best_len,
                                   r2.begin() + t + static_cast<long long>(rel[best_k].size()));

    DehnStep step;
    step.relator = best_k;
    std::vector<Letter> rotated(matched);
    rotated.insert(rotated.end(), rest.begin(), rest.end());
    step.before = Word::from_letters(rotated);
    step.matched = Word::from_letters(matched);
    step.replacement = Word::from_letters(complement).inverse();
    step.after = step.replacement * Word::from_letters(rest);
    cur = CyclicWord(step.after).base();
    out.trace.push_back(std::move(step));
  }
  out.result = cur;
  out.reduced_to_identity = cur.is_identity();
  return out;
}

bool verify_dehn_trace(const Word& z, const SymmetrizedSet& relators, const DehnResult& result) {
  Word cur = CyclicWord(z).base();
  for (const DehnStep& step : result.trace) {
    if (!(CyclicWord(step.before) == CyclicWord(cur))) return false;
    if (step.before.length() != cur.length()) return false;  // rotation, not a reduction
    if (step.relator >= relators.size()) return false;
    const CyclicWord& r = relators.members()[step.relator];
    long long m = step.matched.length();
    if (2 * m <= r.length()) return false;
    if (!(CyclicWord(step.matched * step.replacement.inverse()) == r)) return false;
    std::vector<Letter> before = step.before.letters();
    std::vector<Letter> ml = step.matched.letters();
    if (static_cast<long long>(before.size()) < m ||
        !std::equal(ml.begin(), ml.end(), before.begin()))
      return false;
    Word rest = Word::from_letters({before.begin() + m, before.end()});
    if (!(step.after == step.replacement * rest)) return false;
    cur = CyclicWord(step.after).base();
  }
  return result.result == cur && result.reduced_to_identity == cur.is_identity();
}

std::optional<LengthCertificate> non_membership_certificate(const Word& z,
                                                            const SymmetrizedSet& relators) {
  if (z.is_identity()) throw std::invalid_argument("certificate requires a nontrivial word");
  CyclicWord cz(z);
  if (cz.length() != z.length())
    throw std::invalid_argument("certificate requires a cyclically reduced word");
  if (relators.contains(cz))
    throw std::invalid_argument("word already lies in the symmetrized set");
  if (!relators.certified() || relators.size() == 0) return std::nullopt;
  long long min_len = relators.min_length();
  if (min_len >= z.length()) return LengthCertificate{z.length(), min_len};
  return std::nullopt;
}

std::vector<Word> parse_relator_lines(std::istream& in, int rank) {
  std::vector<Word> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (!(probe >> tok)) continue;
    out.push_back(Word::parse(line, rank));
  }
  return out;
}

std::vector<Word> read_relator_file(const std::string& path, int rank) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open relator file: " + path);
  return parse_relator_lines(in, rank);
}

}  // namespace cindkit
