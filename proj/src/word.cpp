#include "cindkit/word.h"

#include "cindkit/cyclic_match.h"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cindkit {

namespace {

void append_run(std::vector<Run>& out, Run r) {
  if (r.exp == 0) return;
  if (!out.empty() && out.back().gen == r.gen) {
    out.back().exp += r.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(r);
}

std::string gen_name(int gen, int rank) {
  if (rank == 2) return gen == 0 ? "a" : "b";
  return "x" + std::to_string(gen + 1);
}

int parse_gen_name(const std::string& name, int rank) {
  if (name == "a" && rank >= 1) return 0;
  if (name == "b" && rank >= 2) return 1;
  if (name.size() >= 2 && name[0] == 'x') {
    int idx = std::stoi(name.substr(1));
    if (idx >= 1 && idx <= rank) return idx - 1;
  }
  throw std::invalid_argument("unknown generator '" + name + "' for rank " + std::to_string(rank));
}

}  // namespace

Word::Word(int rank, std::vector<Run> runs) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  runs_.reserve(runs.size());
  for (const Run& r : runs) {
    if (r.gen < 0 || r.gen >= rank) throw std::invalid_argument("generator index out of range");
    append_run(runs_, r);
  }
}

Word Word::parse(const std::string& text, int rank) {
  std::vector<Run> runs;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    // parenthesised grouping is plain concatenation; strip the markers
    std::string clean;
    for (char c : tok)
      if (c != '(' && c != ')') clean.push_back(c);
    if (clean.empty()) continue;
    if (clean == "1") continue;
    long long exp = 1;
    std::string name = clean;
    if (auto caret = clean.find('^'); caret != std::string::npos) {
      name = clean.substr(0, caret);
      try {
        exp = std::stoll(clean.substr(caret + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in token '" + tok + "'");
      }
    }
    runs.push_back({parse_gen_name(name, rank), exp});
  }
  return Word(rank, std::move(runs));
}

Word Word::from_letters(const std::vector<Letter>& ls, int rank) {
  std::vector<Run> runs;
  runs.reserve(ls.size());
  for (Letter c : ls) runs.push_back({letter_gen(c), letter_negative(c) ? -1LL : 1LL});
  return Word(rank, std::move(runs));
}

Word Word::generator_power(int gen, long long exp, int rank) {
  return Word(rank, {Run{gen, exp}});
}

long long Word::length() const {
  long long n = 0;
  for (const Run& r : runs_) n += r.exp < 0 ? -r.exp : r.exp;
  return n;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const Run& r : runs_) {
    Letter c = letter_code(r.gen, r.exp < 0);
    long long k = r.exp < 0 ? -r.exp : r.exp;
    for (long long i = 0; i < k; ++i) out.push_back(c);
  }
  return out;
}

Word Word::inverse() const {
  Word w(rank_);
  w.runs_.reserve(runs_.size());
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) w.runs_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(long long k) const {
  Word base = k < 0 ? inverse() : *this;
  long long m = k < 0 ? -k : k;
  Word acc(rank_);
  while (m > 0) {
    if (m & 1) acc = acc * base;
    base = base * base;
    m >>= 1;
  }
  return acc;
}

std::string Word::str() const {
  if (runs_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Run& r : runs_) {
    if (!first) out << ' ';
    first = false;
    out << gen_name(r.gen, rank_);
    if (r.exp != 1) out << '^' << r.exp;
  }
  return out.str();
}

Word operator*(const Word& x, const Word& y) {
  if (x.rank_ != y.rank_) throw std::invalid_argument("rank mismatch in concatenation");
  Word out(x.rank_);
  out.runs_ = x.runs_;
  for (const Run& r : y.runs_) append_run(out.runs_, r);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

Word conjugate(const Word& u, const Word& x) { return u.inverse() * x * u; }

SignProfile sign_profile(const Word& x, int gen) {
  if (gen < 0 || gen >= x.rank()) throw std::invalid_argument("generator index out of range");
  bool pos = false, neg = false;
  for (const Run& r : x.runs())
    if (r.gen == gen) (r.exp > 0 ? pos : neg) = true;
  if (pos && neg) return SignProfile::Mixed;
  if (pos) return SignProfile::AllPositive;
  if (neg) return SignProfile::AllNegative;
  return SignProfile::Absent;
}

const char* sign_profile_name(SignProfile p) {
  switch (p) {
    case SignProfile::AllPositive: return "all-positive";
    case SignProfile::AllNegative: return "all-negative";
    case SignProfile::Mixed: return "mixed";
    default: return "absent";
  }
}

std::vector<Run> flatten_signs(const Word& x) {
  std::vector<Run> out;
  out.reserve(x.runs().size());
  for (const Run& r : x.runs()) out.push_back({r.gen, r.exp < 0 ? -r.exp : r.exp});
  return out;
}

CyclicWord::CyclicWord(const Word& x) : base_(x.rank()) {
  std::vector<Letter> ls = x.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == letter_inverse(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(ls.begin() + lo, ls.begin() + hi);
  if (core.empty()) return;
  std::size_t shift = least_rotation(core);
  std::rotate(core.begin(), core.begin() + shift, core.end());
  base_ = Word::from_letters(core, x.rank());
}

std::string CyclicWord::str() const { return base_.str(); }

bool operator<(const CyclicWord& x, const CyclicWord& y) {
  if (x.rank() != y.rank()) return x.rank() < y.rank();
  const auto& xr = x.base().runs();
  const auto& yr = y.base().runs();
  return std::lexicographical_compare(
      xr.begin(), xr.end(), yr.begin(), yr.end(), [](const Run& p, const Run& q) {
        if (p.gen != q.gen) return p.gen < q.gen;
        return p.exp < q.exp;
      });
}

CommonSubstring max_common_cyclic_substring(const CyclicWord& x, const CyclicWord& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch in cyclic match");
  if (x == y) throw std::invalid_argument("piece undefined for equal cycles");
  std::vector<Letter> xs = x.letters(), ys = y.letters();
  int alphabet = 2 * x.rank();
  long long len = common_cycle_length(xs, ys, alphabet);
  CommonSubstring res;
  res.length = len;
  if (len > 0) res.witness = Word::from_letters(common_cycle_witness(xs, ys, alphabet, len), x.rank());
  else res.witness = Word(x.rank());
  return res;
}

}  // namespace cindkit
