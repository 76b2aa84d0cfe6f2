#include "cindkit/groups.h"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cindkit {
namespace {

long long norm_mod(long long v, long long q) {
  if (q == 0) return v;
  long long r = v % q;
  return r < 0 ? r + q : r;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

long long parse_ll(const std::string& s) {
  size_t pos = 0;
  long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

bool is_identity_element(const Element& x) {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, long long>) return v == 0;
        if constexpr (std::is_same_v<T, WreathElem>) return v.support.empty() && v.shift == 0;
        if constexpr (std::is_same_v<T, FpWord>) return v.letters.empty();
        if constexpr (std::is_same_v<T, Word>) return v.is_identity();
        if constexpr (std::is_same_v<T, Endo>) return v == Endo();
      },
      x);
}

BasisWord schreier_rewrite_raw(long long qg, long long qh, const FpWord& x) {
  BasisWord out;
  auto push = [&](long long g, long long h, int sign) {
    if (g == 0 || h == 0) return;
    std::pair<long long, long long> key{g, h};
    if (!out.letters.empty() && out.letters.back().first == key &&
        out.letters.back().second == -sign) {
      out.letters.pop_back();
      return;
    }
    out.letters.push_back({key, sign});
  };
  long long u = 0, v = 0;
  for (const FpLetter& l : x.letters) {
    if (l.from_h) {
      v = norm_mod(v + l.value, qh);
      continue;
    }
    long long u2 = norm_mod(u + l.value, qg);
    push(u, v, +1);
    push(u2, v, -1);
    u = u2;
  }
  if (u != 0 || v != 0)
    throw std::invalid_argument("schreier_rewrite: word is not in the kernel");
  return out;
}

}  // namespace

// --------------------------------------------------------------------------

bool element_eq(const Element& x, const Element& y) { return x == y; }

std::string element_str(const Element& x) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, WreathElem>) {
          std::ostringstream os;
          os << '[';
          bool first = true;
          for (auto& [p, val] : v.support) {
            if (!first) os << ' ';
            first = false;
            os << p << ':' << val;
          }
          os << "];" << v.shift;
          return os.str();
        } else if constexpr (std::is_same_v<T, FpWord>) {
          if (v.letters.empty()) return "e";
          std::ostringstream os;
          bool first = true;
          for (const FpLetter& l : v.letters) {
            if (!first) os << ' ';
            first = false;
            os << (l.from_h ? 'h' : 'g') << l.value;
          }
          return os.str();
        } else if constexpr (std::is_same_v<T, Word>) {
          return v.str();
        } else if constexpr (std::is_same_v<T, Endo>) {
          return "(a->" + v.image_a().str() + ", b->" + v.image_b().str() + ")";
        }
      },
      x);
}

// --------------------------------------------------------------------------
// SubgroupDescriptor

SubgroupDescriptor SubgroupDescriptor::trivial() {
  return SubgroupDescriptor(Trivial{}, true);
}
SubgroupDescriptor SubgroupDescriptor::whole() { return SubgroupDescriptor(Whole{}, true); }
SubgroupDescriptor SubgroupDescriptor::index_in_z(long long d) {
  if (d < 0) d = -d;
  return SubgroupDescriptor(IndexInZ{d}, true);
}
SubgroupDescriptor SubgroupDescriptor::support_closure(std::vector<long long> excluded,
                                                       long long value_gen, long long h_modulus) {
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  long long vm;
  if (h_modulus == 0) {
    vm = value_gen < 0 ? -value_gen : value_gen;
    if (vm == 0) throw std::invalid_argument("support_closure: trivial value generator");
  } else {
    vm = std::gcd(norm_mod(value_gen, h_modulus), h_modulus);
    if (vm == 0) throw std::invalid_argument("support_closure: trivial value generator");
  }
  bool normal = excluded.empty();
  return SubgroupDescriptor(SupportClosure{std::move(excluded), vm, h_modulus}, normal);
}
SubgroupDescriptor SubgroupDescriptor::exp_sum_kernel(
    std::vector<std::pair<long long, long long>> targets, long long qg, long long qh) {
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  return SubgroupDescriptor(ExpSumKernel{std::move(targets), qg, qh}, false);
}
SubgroupDescriptor SubgroupDescriptor::closure_of_words(
    std::shared_ptr<const SymmetrizedSet> relators) {
  if (!relators) throw std::invalid_argument("closure_of_words: null relator set");
  return SubgroupDescriptor(ClosureOfWords{std::move(relators)}, false);
}

Tri SubgroupDescriptor::contains(const Element& x) const {
  return std::visit(
      [&x](const auto& p) -> Tri {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Trivial>) {
          return is_identity_element(x) ? Tri::Yes : Tri::No;
        } else if constexpr (std::is_same_v<P, Whole>) {
          return Tri::Yes;
        } else if constexpr (std::is_same_v<P, IndexInZ>) {
          long long v = std::get<long long>(x);
          if (p.d == 0) return v == 0 ? Tri::Yes : Tri::No;
          return v % p.d == 0 ? Tri::Yes : Tri::No;
        } else if constexpr (std::is_same_v<P, SupportClosure>) {
          const auto& w = std::get<WreathElem>(x);
          if (w.shift != 0) return Tri::No;
          for (auto& [pos, val] : w.support) {
            if (std::binary_search(p.excluded.begin(), p.excluded.end(), pos)) return Tri::No;
            if (p.value_modulus > 1 && val % p.value_modulus != 0) return Tri::No;
          }
          return Tri::Yes;
        } else if constexpr (std::is_same_v<P, ExpSumKernel>) {
          const auto& w = std::get<FpWord>(x);
          long long sg = 0, sh = 0;
          for (const FpLetter& l : w.letters) {
            if (l.from_h)
              sh = norm_mod(sh + l.value, p.qh);
            else
              sg = norm_mod(sg + l.value, p.qg);
          }
          if (sg != 0 || sh != 0) return Tri::No;
          BasisWord bw = schreier_rewrite_raw(p.qg, p.qh, w);
          for (auto& t : p.targets)
            if (exponent_sum(bw, t) != 0) return Tri::No;
          return Tri::Yes;
        } else {
          const auto& closure = static_cast<const ClosureOfWords&>(p);
          const Word& w = std::get<Word>(x);
          if (w.is_identity()) return Tri::Yes;
          if (closure.relators->size() == 0) return Tri::No;
          DehnResult r = dehn_reduce(w, *closure.relators);
          if (r.reduced_to_identity) return Tri::Yes;
          return closure.relators->certified() ? Tri::No : Tri::Unknown;
        }
      },
      payload_);
}

std::string SubgroupDescriptor::str() const {
  return std::visit(
      [](const auto& p) -> std::string {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Trivial>) {
          return "trivial";
        } else if constexpr (std::is_same_v<P, Whole>) {
          return "whole";
        } else if constexpr (std::is_same_v<P, IndexInZ>) {
          return std::to_string(p.d) + "Z";
        } else if constexpr (std::is_same_v<P, SupportClosure>) {
          std::ostringstream os;
          os << "supp-closure(excl={";
          for (size_t i = 0; i < p.excluded.size(); ++i) {
            if (i) os << ',';
            os << p.excluded[i];
          }
          os << "}";
          if (p.value_modulus > 1) os << ", values in " << p.value_modulus << "H";
          os << ")";
          return os.str();
        } else if constexpr (std::is_same_v<P, ExpSumKernel>) {
          std::ostringstream os;
          os << "expsum-kernel{";
          for (size_t i = 0; i < p.targets.size(); ++i) {
            if (i) os << ',';
            os << "[g" << p.targets[i].first << ",h" << p.targets[i].second << "]";
          }
          os << "}";
          return os.str();
        } else {
          const auto& closure = static_cast<const ClosureOfWords&>(p);
          std::ostringstream os;
          os << "closure(" << closure.relators->size() << " relators, "
             << (closure.relators->certified() ? "certified" : "uncertified") << ")";
          return os.str();
        }
      },
      payload_);
}

std::optional<SubgroupDescriptor> SubgroupDescriptor::intersect(const SubgroupDescriptor& x,
                                                                const SubgroupDescriptor& y) {
  if (std::holds_alternative<Trivial>(x.payload_)) return x;
  if (std::holds_alternative<Trivial>(y.payload_)) return y;
  if (std::holds_alternative<Whole>(x.payload_)) return y;
  if (std::holds_alternative<Whole>(y.payload_)) return x;
  if (auto* a = std::get_if<IndexInZ>(&x.payload_)) {
    if (auto* b = std::get_if<IndexInZ>(&y.payload_)) {
      if (a->d == 0 || b->d == 0) return index_in_z(0);
      return index_in_z(std::lcm(a->d, b->d));
    }
  }
  if (auto* a = std::get_if<SupportClosure>(&x.payload_)) {
    if (auto* b = std::get_if<SupportClosure>(&y.payload_)) {
      if (a->h_modulus != b->h_modulus) return std::nullopt;
      std::vector<long long> excl = a->excluded;
      excl.insert(excl.end(), b->excluded.begin(), b->excluded.end());
      std::sort(excl.begin(), excl.end());
      excl.erase(std::unique(excl.begin(), excl.end()), excl.end());
      long long vm = std::lcm(a->value_modulus, b->value_modulus);
      bool normal = excl.empty();
      return SubgroupDescriptor(SupportClosure{std::move(excl), vm, a->h_modulus}, normal);
    }
  }
  if (auto* a = std::get_if<ExpSumKernel>(&x.payload_)) {
    if (auto* b = std::get_if<ExpSumKernel>(&y.payload_)) {
      if (a->qg != b->qg || a->qh != b->qh) return std::nullopt;
      auto t = a->targets;
      t.insert(t.end(), b->targets.begin(), b->targets.end());
      return exp_sum_kernel(std::move(t), a->qg, a->qh);
    }
  }
  return std::nullopt;
}

// --------------------------------------------------------------------------
// GroupInstance

SubgroupDescriptor GroupInstance::chain_subgroup(const Element&, long long) const {
  throw std::runtime_error("refusal: " + name() + " has no chain-subgroup form");
}
bool GroupInstance::chain_witness_verify(const Element&, long long, long long) const {
  throw std::runtime_error("refusal: " + name() + " has no chain witness");
}

GroupInstance::CosetAction GroupInstance::coset_action(const Element& delta,
                                                       long long t_index) const {
  Element x = mul(delta, transversal(t_index));
  long long j = coset_index(x);
  Element gamma = mul(inv(transversal(j)), x);
  if (!in_gamma(gamma)) throw std::logic_error("coset_action: residue not in the subgroup");
  return CosetAction{j, std::move(gamma)};
}

Element GroupInstance::conj(const Element& t, const Element& g) const {
  return mul(inv(t), mul(g, t));
}

// --------------------------------------------------------------------------
// IntegerChain

IntegerChain::IntegerChain(long long d, long long stride) : d_(d), stride_(stride) {
  if (d < 1 || stride < 1) throw std::invalid_argument("IntegerChain: need d, stride >= 1");
}
std::string IntegerChain::name() const {
  if (stride_ == 1) return "intchain:" + std::to_string(d_);
  return "intchain:" + std::to_string(d_) + ";stride=" + std::to_string(stride_);
}
Element IntegerChain::mul(const Element& x, const Element& y) const {
  return std::get<long long>(x) + std::get<long long>(y);
}
Element IntegerChain::inv(const Element& x) const { return -std::get<long long>(x); }
Element IntegerChain::transversal(long long i) const {
  if (i < 0 || i >= d_) throw std::out_of_range("IntegerChain: transversal index");
  return i * stride_;
}
bool IntegerChain::in_gamma(const Element& x) const {
  return std::get<long long>(x) % (d_ * stride_) == 0;
}
long long IntegerChain::coset_index(const Element& x) const {
  long long v = std::get<long long>(x);
  if (v % stride_ != 0) throw std::invalid_argument("IntegerChain: element off the lattice");
  return norm_mod(v / stride_, d_);
}
Element IntegerChain::random_delta(std::mt19937& rng) const {
  return stride_ * std::uniform_int_distribution<long long>(-50, 50)(rng);
}
Element IntegerChain::random_gamma(std::mt19937& rng) const {
  return d_ * stride_ * std::uniform_int_distribution<long long>(-20, 20)(rng);
}
Element IntegerChain::parse_element(const std::string& text) const {
  return parse_ll(trim(text));
}

// --------------------------------------------------------------------------
// AmbientInfiniteZ

Element AmbientInfiniteZ::mul(const Element& x, const Element& y) const {
  return std::get<long long>(x) + std::get<long long>(y);
}
Element AmbientInfiniteZ::inv(const Element& x) const { return -std::get<long long>(x); }
Element AmbientInfiniteZ::transversal(long long) const {
  throw std::runtime_error("refusal: intchain:inf has no computable transversal");
}
long long AmbientInfiniteZ::coset_index(const Element&) const {
  throw std::runtime_error("refusal: intchain:inf has no computable transversal");
}
Element AmbientInfiniteZ::random_delta(std::mt19937& rng) const {
  return std::uniform_int_distribution<long long>(-50, 50)(rng);
}
Element AmbientInfiniteZ::random_gamma(std::mt19937& rng) const { return random_delta(rng); }
Element AmbientInfiniteZ::parse_element(const std::string& text) const {
  return parse_ll(trim(text));
}

// --------------------------------------------------------------------------
// Wreath

long long enum_int(long long i, EnumOrder order) {
  if (i < 0) throw std::out_of_range("enum_int: negative index");
  long long mag = (i + 1) / 2;
  bool neg = (order == EnumOrder::Std) ? (i != 0 && i % 2 == 0) : (i % 2 == 1);
  return neg ? -mag : mag;
}
long long enum_int_index(long long g, EnumOrder order) {
  if (g == 0) return 0;
  if (order == EnumOrder::Std) return g > 0 ? 2 * g - 1 : -2 * g;
  return g < 0 ? -2 * g - 1 : 2 * g;
}

Wreath::Wreath(long long q, EnumOrder order, long long shift_stride, long long gamma_modulus)
    : q_(q), order_(order), stride_(shift_stride), gamma_modulus_(gamma_modulus) {
  if (q < 0 || stride_ < 1 || gamma_modulus_ < 0)
    throw std::invalid_argument("Wreath: bad parameters");
  if (gamma_modulus_ != 0 && gamma_modulus_ % stride_ != 0)
    throw std::invalid_argument("Wreath: gamma modulus must lie on the shift lattice");
}
std::string Wreath::name() const {
  std::string h = q_ == 0 ? "Z" : "Z" + std::to_string(q_);
  std::string s = "wreath:" + h + ",Z";
  if (order_ == EnumOrder::Alt) s += ";order=alt";
  if (stride_ != 1) s += ";stride=" + std::to_string(stride_);
  if (gamma_modulus_ != 0) s += ";gamma=" + std::to_string(gamma_modulus_);
  return s;
}
std::optional<long long> Wreath::transversal_count() const {
  if (gamma_modulus_ == 0) return std::nullopt;
  return gamma_modulus_ / stride_;
}
long long Wreath::norm_value(long long v) const { return norm_mod(v, q_); }
Element Wreath::identity() const { return WreathElem{}; }
Element Wreath::delta_at(long long position, long long value) const {
  WreathElem w;
  value = norm_value(value);
  if (value != 0) w.support[position] = value;
  return w;
}
Element Wreath::mul(const Element& xe, const Element& ye) const {
  const auto& x = std::get<WreathElem>(xe);
  const auto& y = std::get<WreathElem>(ye);
  WreathElem out = x;
  for (auto& [p, v] : y.support) {
    long long pos = p + x.shift;
    long long merged = norm_value(out.support[pos] + v);
    if (merged == 0)
      out.support.erase(pos);
    else
      out.support[pos] = merged;
  }
  out.shift = x.shift + y.shift;
  return out;
}
Element Wreath::inv(const Element& xe) const {
  const auto& x = std::get<WreathElem>(xe);
  WreathElem out;
  out.shift = -x.shift;
  for (auto& [p, v] : x.support) out.support[p - x.shift] = norm_value(-v);
  return out;
}
Element Wreath::transversal(long long i) const {
  WreathElem t;
  if (gamma_modulus_ == 0) {
    t.shift = stride_ * enum_int(i, order_);
  } else {
    long long count = gamma_modulus_ / stride_;
    if (i < 0 || i >= count) throw std::out_of_range("Wreath: transversal index");
    t.shift = stride_ * i;
  }
  return t;
}
bool Wreath::in_gamma(const Element& xe) const {
  long long s = std::get<WreathElem>(xe).shift;
  return gamma_modulus_ == 0 ? s == 0 : s % gamma_modulus_ == 0;
}
long long Wreath::coset_index(const Element& xe) const {
  long long s = std::get<WreathElem>(xe).shift;
  if (s % stride_ != 0) throw std::invalid_argument("Wreath: shift off the lattice");
  if (gamma_modulus_ == 0) return enum_int_index(s / stride_, order_);
  return norm_mod(s, gamma_modulus_) / stride_;
}
Element Wreath::random_delta(std::mt19937& rng) const {
  WreathElem w;
  std::uniform_int_distribution<long long> pos(-4, 4);
  std::uniform_int_distribution<long long> val(q_ == 0 ? -3 : 1, q_ == 0 ? 3 : q_ - 1);
  int k = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < k; ++i) {
    long long v = norm_value(val(rng));
    if (v != 0) w.support[pos(rng)] = v;
  }
  w.shift = stride_ * std::uniform_int_distribution<long long>(-3, 3)(rng);
  return w;
}
Element Wreath::random_gamma(std::mt19937& rng) const {
  WreathElem w = std::get<WreathElem>(random_delta(rng));
  w.shift = gamma_modulus_ == 0
                ? 0
                : gamma_modulus_ * std::uniform_int_distribution<long long>(-2, 2)(rng);
  return w;
}
Element Wreath::parse_element(const std::string& raw) const {
  std::string text = trim(raw);
  if (text == "e" || text == "1") return identity();
  size_t lb = text.find('[');
  size_t rb = text.find(']');
  if (lb != 0 || rb == std::string::npos)
    throw std::invalid_argument("Wreath element: expected '[p:v ...];shift'");
  WreathElem w;
  std::istringstream inner(text.substr(1, rb - 1));
  std::string tok;
  while (inner >> tok) {
    size_t colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("Wreath element: bad pair " + tok);
    long long p = parse_ll(tok.substr(0, colon));
    long long v = norm_value(parse_ll(tok.substr(colon + 1)));
    if (v != 0) w.support[p] = v;
  }
  std::string tail = trim(text.substr(rb + 1));
  if (!tail.empty()) {
    if (tail[0] != ';') throw std::invalid_argument("Wreath element: expected ';shift'");
    w.shift = parse_ll(trim(tail.substr(1)));
  }
  return w;
}

SubgroupDescriptor Wreath::chain_subgroup(const Element& gamma0, long long k) const {
  if (k < 0) throw std::invalid_argument("chain_subgroup: k >= 0");
  if (stride_ != 1 || gamma_modulus_ != 0)
    throw std::runtime_error("refusal: chain form needs the plain wreath pair");
  const auto& g = std::get<WreathElem>(gamma0);
  if (g.shift != 0 || g.support.size() != 1)
    throw std::invalid_argument("chain_subgroup: base element must be a single lamp");
  auto [pos, val] = *g.support.begin();
  std::vector<long long> excluded;
  for (long long i = 0; i < k; ++i) excluded.push_back(pos - enum_int(i, order_));
  return SubgroupDescriptor::support_closure(std::move(excluded), val, q_);
}

bool Wreath::chain_witness_verify(const Element& gamma0, long long k, long long j) const {
  if (j >= k) return false;
  SubgroupDescriptor lk = chain_subgroup(gamma0, k);
  Element moved = conj(transversal(j), gamma0);
  return lk.contains(moved) == Tri::No;
}

// --------------------------------------------------------------------------
// FreeProductKernel

FreeProductKernel::FreeProductKernel(long long qg, long long qh, EnumOrder h_order)
    : qg_(qg), qh_(qh), order_(h_order) {
  if (qg < 0 || qh < 0) throw std::invalid_argument("FreeProductKernel: bad moduli");
}
std::string FreeProductKernel::name() const {
  auto f = [](long long q) { return q == 0 ? std::string("Z") : "Z" + std::to_string(q); };
  return "freeprod:" + f(qg_) + "," + f(qh_);
}
std::optional<long long> FreeProductKernel::transversal_count() const {
  if (qg_ == 0 || qh_ == 0) return std::nullopt;
  return qg_ * qh_;
}
FpWord FreeProductKernel::normalize(std::vector<FpLetter> letters) const {
  FpWord out;
  for (FpLetter l : letters) {
    l.value = norm_mod(l.value, l.from_h ? qh_ : qg_);
    if (l.value == 0) continue;
    if (!out.letters.empty() && out.letters.back().from_h == l.from_h) {
      long long merged = norm_mod(out.letters.back().value + l.value, l.from_h ? qh_ : qg_);
      if (merged == 0)
        out.letters.pop_back();
      else
        out.letters.back().value = merged;
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}
Element FreeProductKernel::mul(const Element& xe, const Element& ye) const {
  const auto& x = std::get<FpWord>(xe);
  const auto& y = std::get<FpWord>(ye);
  std::vector<FpLetter> all = x.letters;
  all.insert(all.end(), y.letters.begin(), y.letters.end());
  return normalize(std::move(all));
}
Element FreeProductKernel::inv(const Element& xe) const {
  const auto& x = std::get<FpWord>(xe);
  std::vector<FpLetter> rev;
  for (auto it = x.letters.rbegin(); it != x.letters.rend(); ++it)
    rev.push_back(FpLetter{it->from_h, -it->value});
  return normalize(std::move(rev));
}
std::pair<long long, long long> FreeProductKernel::projection(const FpWord& x) const {
  long long sg = 0, sh = 0;
  for (const FpLetter& l : x.letters) {
    if (l.from_h)
      sh = norm_mod(sh + l.value, qh_);
    else
      sg = norm_mod(sg + l.value, qg_);
  }
  return {sg, sh};
}
std::pair<long long, long long> FreeProductKernel::transversal_pair(long long i) const {
  if (qg_ == 0) throw std::runtime_error("refusal: infinite G factor has no indexed transversal");
  long long g = i % qg_;
  long long hi = i / qg_;
  long long h;
  if (qh_ == 0) {
    h = enum_int(hi, order_);
  } else {
    if (hi >= qh_) throw std::out_of_range("FreeProductKernel: transversal index");
    h = hi;
  }
  return {g, h};
}
Element FreeProductKernel::transversal(long long i) const {
  auto [g, h] = transversal_pair(i);
  return normalize({FpLetter{false, g}, FpLetter{true, h}});
}
bool FreeProductKernel::in_gamma(const Element& xe) const {
  return projection(std::get<FpWord>(xe)) == std::pair<long long, long long>{0, 0};
}
long long FreeProductKernel::coset_index(const Element& xe) const {
  if (qg_ == 0) throw std::runtime_error("refusal: infinite G factor has no indexed transversal");
  auto [g, h] = projection(std::get<FpWord>(xe));
  long long hi = qh_ == 0 ? enum_int_index(h, order_) : h;
  return hi * qg_ + g;
}
FpWord FreeProductKernel::commutator(long long g, long long h) const {
  return normalize({FpLetter{false, g}, FpLetter{true, h}, FpLetter{false, -g}, FpLetter{true, -h}});
}
Element FreeProductKernel::random_delta(std::mt19937& rng) const {
  std::vector<FpLetter> ls;
  int k = std::uniform_int_distribution<int>(0, 6)(rng);
  auto val = [&](long long q) {
    return q == 0 ? std::uniform_int_distribution<long long>(-3, 3)(rng)
                  : std::uniform_int_distribution<long long>(0, q - 1)(rng);
  };
  for (int i = 0; i < k; ++i) {
    bool from_h = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    ls.push_back(FpLetter{from_h, val(from_h ? qh_ : qg_)});
  }
  return normalize(std::move(ls));
}
Element FreeProductKernel::random_gamma(std::mt19937& rng) const {
  Element out = identity();
  int k = std::uniform_int_distribution<int>(0, 3)(rng);
  auto val = [&](long long q) {
    long long v = q == 0 ? std::uniform_int_distribution<long long>(-3, 3)(rng)
                         : std::uniform_int_distribution<long long>(1, q - 1)(rng);
    return v;
  };
  for (int i = 0; i < k; ++i) {
    FpWord c = commutator(val(qg_), val(qh_));
    Element piece = c;
    if (std::uniform_int_distribution<int>(0, 1)(rng)) piece = inv(piece);
    out = mul(out, piece);
  }
  return out;
}
Element FreeProductKernel::parse_element(const std::string& raw) const {
  static const long long kH[4] = {1, 10, 20, 30};
  std::string text = trim(raw);
  if (text == "e" || text == "1") return identity();
  Element out = identity();
  std::istringstream in(text);
  std::string tok;
  auto named = [&](const std::string& t) -> FpLetter {
    if (t.size() < 2) throw std::invalid_argument("bad letter: " + t);
    if (t[0] == 'g') return FpLetter{false, parse_ll(t.substr(1)) == 0 ? 1 : parse_ll(t.substr(1))};
    if (t[0] == 'h') {
      long long idx = parse_ll(t.substr(1));
      if (idx < 0 || idx > 3) throw std::invalid_argument("h-index out of range: " + t);
      return FpLetter{true, kH[idx]};
    }
    throw std::invalid_argument("bad letter: " + t);
  };
  while (in >> tok) {
    bool invert = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      invert = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    Element piece;
    if (tok.front() == '[' && tok.back() == ']') {
      auto parts = split(tok.substr(1, tok.size() - 2), ',');
      if (parts.size() != 2) throw std::invalid_argument("bad commutator: " + tok);
      FpLetter g = named(trim(parts[0]));
      FpLetter h = named(trim(parts[1]));
      if (g.from_h || !h.from_h) throw std::invalid_argument("commutator wants [g..,h..]");
      piece = commutator(g.value, h.value);
    } else {
      FpLetter l = named(tok);
      piece = normalize({l});
    }
    if (invert) piece = inv(piece);
    out = mul(out, piece);
  }
  return out;
}

BasisWord schreier_rewrite(const FreeProductKernel& inst, const FpWord& x) {
  return schreier_rewrite_raw(inst.qg(), inst.qh(), x);
}
FpWord expand_basis_word(const FreeProductKernel& inst, const BasisWord& w) {
  Element out = inst.identity();
  for (auto& [t, sign] : w.letters) {
    Element c = inst.commutator(t.first, t.second);
    if (sign < 0) c = inst.inv(c);
    out = inst.mul(out, c);
  }
  return std::get<FpWord>(out);
}
long long occurrence_count(const BasisWord& w, std::pair<long long, long long> target) {
  long long n = 0;
  for (auto& [t, sign] : w.letters)
    if (t == target) ++n;
  return n;
}
long long exponent_sum(const BasisWord& w, std::pair<long long, long long> target) {
  long long n = 0;
  for (auto& [t, sign] : w.letters)
    if (t == target) n += sign;
  return n;
}
std::string basis_word_str(const BasisWord& w) {
  if (w.letters.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (auto& [t, sign] : w.letters) {
    if (!first) os << ' ';
    first = false;
    os << "[g" << t.first << ",h" << t.second << "]";
    if (sign < 0) os << "^-1";
  }
  return os.str();
}

// --------------------------------------------------------------------------
// BSWitness

BSWitness::BSWitness(long long n, long long m)
    : n_(n), m_(m), d_(std::gcd(n < 0 ? -n : n, m < 0 ? -m : m)), quotient_(d_ == 0 ? 1 : d_) {
  if (n == 0 || m == 0) throw std::invalid_argument("BSWitness: parameters must be nonzero");
}
std::string BSWitness::name() const {
  return "bs:" + std::to_string(n_) + "," + std::to_string(m_);
}
Element BSWitness::identity() const { return quotient_.identity(); }
Element BSWitness::mul(const Element& x, const Element& y) const { return quotient_.mul(x, y); }
Element BSWitness::inv(const Element& x) const { return quotient_.inv(x); }
Element BSWitness::transversal(long long i) const { return quotient_.transversal(i); }
bool BSWitness::in_gamma(const Element& x) const { return quotient_.in_gamma(x); }
long long BSWitness::coset_index(const Element& x) const { return quotient_.coset_index(x); }
Element BSWitness::random_delta(std::mt19937& rng) const { return quotient_.random_delta(rng); }
Element BSWitness::random_gamma(std::mt19937& rng) const { return quotient_.random_gamma(rng); }
Element BSWitness::parse_element(const std::string& text) const {
  return quotient_.parse_element(text);
}
SubgroupDescriptor BSWitness::edge_closure() const { return SubgroupDescriptor::index_in_z(d_); }
SubgroupDescriptor BSWitness::chain_subgroup(const Element& gamma0, long long k) const {
  if (d_ <= 1)
    throw std::runtime_error(
        "refusal: gcd(n,m) = 1, the witness quotient collapses and certifies nothing");
  return quotient_.chain_subgroup(gamma0, k);
}
bool BSWitness::chain_witness_verify(const Element& gamma0, long long k, long long j) const {
  if (d_ <= 1) return false;
  return quotient_.chain_witness_verify(gamma0, k, j);
}

// --------------------------------------------------------------------------
// AutF2Instance

namespace {
Endo ad_generator(int gen, bool negative) {
  // x -> u x u^-1 for a single letter u, written in the elementary symbols:
  // ad_a = chi psi^-1 chi psi^-1, ad_b its tau-conjugate.
  std::vector<AutSym> seq;
  if (gen == 0)
    seq = negative ? std::vector<AutSym>{AutSym::Psi, AutSym::Chi, AutSym::Psi, AutSym::Chi}
                   : std::vector<AutSym>{AutSym::Chi, AutSym::PsiInv, AutSym::Chi, AutSym::PsiInv};
  else
    seq = negative
              ? std::vector<AutSym>{AutSym::Tau, AutSym::Psi, AutSym::Chi, AutSym::Psi,
                                    AutSym::Chi, AutSym::Tau}
              : std::vector<AutSym>{AutSym::Tau, AutSym::Chi, AutSym::PsiInv, AutSym::Chi,
                                    AutSym::PsiInv, AutSym::Tau};
  Endo f;
  for (AutSym s : seq) f = compose(f, elementary(s));
  return f;
}
}  // namespace

Endo AutF2Instance::ad(const Word& u) {
  Endo f;
  for (Letter l : u.letters()) f = compose(f, ad_generator(letter_gen(l), letter_negative(l)));
  return f;
}

AutF2Instance::AutF2Instance(int n, int L) : n_(n), L_(L) {
  if (n < 2 || L < 0) throw std::invalid_argument("AutF2Instance: need n >= 2, L >= 0");
  reps_ = transversal_R(L);
  rep_inverses_.reserve(reps_.size());
  for (const Endo& r : reps_) rep_inverses_.push_back(r.inverse());
}
std::string AutF2Instance::name() const {
  return "autf2:n=" + std::to_string(n_) + ",L=" + std::to_string(L_);
}
Element AutF2Instance::identity() const { return Endo(); }
Element AutF2Instance::mul(const Element& x, const Element& y) const {
  return compose(std::get<Endo>(x), std::get<Endo>(y));
}
Element AutF2Instance::inv(const Element& x) const { return std::get<Endo>(x).inverse(); }
Element AutF2Instance::transversal(long long i) const {
  if (i < 0 || i >= rep_count()) throw std::out_of_range("AutF2Instance: transversal index");
  return reps_[i];
}
bool AutF2Instance::in_gamma(const Element& x) const {
  return inner_word(std::get<Endo>(x)).has_value();
}
long long AutF2Instance::coset_index(const Element& x) const {
  const Endo& d = std::get<Endo>(x);
  for (long long i = 0; i < rep_count(); ++i)
    if (inner_word(compose(rep_inverses_[i], d)).has_value()) return i;
  throw std::runtime_error("refusal: coset lies outside the truncated transversal");
}
Word AutF2Instance::gamma_word(const Element& x) const {
  auto u = inner_word(std::get<Endo>(x));
  if (!u) throw std::invalid_argument("gamma_word: element is not inner");
  return *u;
}
Element AutF2Instance::random_delta(std::mt19937& rng) const {
  long long i = std::uniform_int_distribution<long long>(0, rep_count() - 1)(rng);
  return compose(reps_[i], std::get<Endo>(random_gamma(rng)));
}
Element AutF2Instance::random_gamma(std::mt19937& rng) const {
  int len = std::uniform_int_distribution<int>(0, 5)(rng);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) ls.push_back(std::uniform_int_distribution<int>(0, 3)(rng));
  return ad(Word::from_letters(ls));
}
Element AutF2Instance::parse_element(const std::string& raw) const {
  std::string text = trim(raw);
  if (text.rfind("ad:", 0) == 0) return ad(Word::parse(text.substr(3)));
  return parse_provenance(text);
}
SubgroupDescriptor AutF2Instance::chain_subgroup(const Element& gamma0, long long k) const {
  Word base = gamma_word(gamma0);
  if (base.is_identity()) throw std::invalid_argument("chain_subgroup: trivial base element");
  std::vector<Word> words;
  for (long long i = k; i < rep_count(); ++i) words.push_back(reps_[i].apply(base));
  if (words.empty()) throw std::runtime_error("refusal: chain index beyond the truncation");
  auto set = std::make_shared<SymmetrizedSet>(SymmetrizedSet::symmetrize(words));
  check_small_cancellation(*set, Rational(1, 6));
  return SubgroupDescriptor::closure_of_words(std::move(set));
}

// --------------------------------------------------------------------------

std::shared_ptr<GroupInstance> parse_instance(const std::string& spec) {
  std::string s = trim(spec);
  size_t colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("instance spec needs 'kind:args'");
  std::string kind = s.substr(0, colon);
  std::string rest = s.substr(colon + 1);
  auto opts = split(rest, ';');
  std::string args = opts[0];

  auto parse_cyclic = [](const std::string& t) -> long long {
    std::string v = trim(t);
    if (v.empty() || v[0] != 'Z') throw std::invalid_argument("expected Z or Zq, got " + t);
    if (v == "Z") return 0;
    return parse_ll(v.substr(1));
  };

  if (kind == "intchain") {
    if (trim(args) == "inf") return std::make_shared<AmbientInfiniteZ>();
    long long stride = 1;
    for (size_t i = 1; i < opts.size(); ++i) {
      std::string o = trim(opts[i]);
      if (o.rfind("stride=", 0) == 0) stride = parse_ll(o.substr(7));
      else throw std::invalid_argument("intchain option: " + o);
    }
    return std::make_shared<IntegerChain>(parse_ll(trim(args)), stride);
  }
  if (kind == "wreath") {
    auto parts = split(args, ',');
    if (parts.size() != 2 || trim(parts[1]) != "Z")
      throw std::invalid_argument("wreath spec wants 'wreath:Zq,Z'");
    EnumOrder order = EnumOrder::Std;
    long long stride = 1, gamma_mod = 0;
    for (size_t i = 1; i < opts.size(); ++i) {
      std::string o = trim(opts[i]);
      if (o == "order=alt") order = EnumOrder::Alt;
      else if (o == "order=std") order = EnumOrder::Std;
      else if (o.rfind("stride=", 0) == 0) stride = parse_ll(o.substr(7));
      else if (o.rfind("gamma=", 0) == 0) gamma_mod = parse_ll(o.substr(6));
      else throw std::invalid_argument("wreath option: " + o);
    }
    return std::make_shared<Wreath>(parse_cyclic(parts[0]), order, stride, gamma_mod);
  }
  if (kind == "freeprod") {
    auto parts = split(args, ',');
    if (parts.size() != 2) throw std::invalid_argument("freeprod spec wants 'freeprod:Zq,Zr'");
    EnumOrder order = EnumOrder::Std;
    for (size_t i = 1; i < opts.size(); ++i)
      if (trim(opts[i]) == "order=alt") order = EnumOrder::Alt;
    return std::make_shared<FreeProductKernel>(parse_cyclic(parts[0]), parse_cyclic(parts[1]),
                                               order);
  }
  if (kind == "bs") {
    auto parts = split(args, ',');
    if (parts.size() != 2) throw std::invalid_argument("bs spec wants 'bs:n,m'");
    return std::make_shared<BSWitness>(parse_ll(trim(parts[0])), parse_ll(trim(parts[1])));
  }
  if (kind == "autf2") {
    int n = -1, L = -1;
    for (const std::string& kv : split(args, ',')) {
      auto p = split(trim(kv), '=');
      if (p.size() != 2) throw std::invalid_argument("autf2 spec wants 'autf2:n=..,L=..'");
      if (trim(p[0]) == "n") n = static_cast<int>(parse_ll(trim(p[1])));
      if (trim(p[0]) == "L") L = static_cast<int>(parse_ll(trim(p[1])));
    }
    if (n < 0 || L < 0) throw std::invalid_argument("autf2 spec wants 'autf2:n=..,L=..'");
    return std::make_shared<AutF2Instance>(n, L);
  }
  throw std::invalid_argument("unknown instance kind: " + kind);
}

// --------------------------------------------------------------------------

bool cocycle_identity_check(const GroupInstance& inst, int samples, unsigned seed,
                            std::string* failure) {
  std::mt19937 rng(seed);
  auto count = inst.transversal_count();
  long long tmax = count ? *count : 40;
  for (int it = 0; it < samples; ++it) {
    Element d1 = (it % 3 == 0) ? inst.random_gamma(rng) : inst.random_delta(rng);
    Element d2 = (it % 4 == 0) ? inst.random_gamma(rng) : inst.random_delta(rng);
    long long t = std::uniform_int_distribution<long long>(0, tmax - 1)(rng);
    bool ok;
    try {
      auto inner = inst.coset_action(d2, t);
      auto outer = inst.coset_action(d1, inner.rep_index);
      auto joint = inst.coset_action(inst.mul(d1, d2), t);
      ok = joint.rep_index == outer.rep_index &&
           element_eq(joint.gamma, inst.mul(outer.gamma, inner.gamma));
    } catch (const std::runtime_error&) {
      continue;  // sample left a truncated transversal; not a law violation
    }
    if (!ok) {
      if (failure) {
        *failure = inst.name() + ": cocycle law fails at d1=" + element_str(d1) +
                   " d2=" + element_str(d2) + " t=" + std::to_string(t);
      }
      return false;
    }
  }
  return true;
}

bool cocycle_chain_check(const GroupInstance& outer, const GroupInstance& inner, int samples,
                         unsigned seed, std::string* failure) {
  std::mt19937 rng(seed);
  auto tc = outer.transversal_count();
  auto sc = inner.transversal_count();
  long long tmax = tc ? *tc : 24;
  long long smax = sc ? *sc : 24;
  for (int it = 0; it < samples; ++it) {
    Element delta = outer.random_delta(rng);
    long long i = std::uniform_int_distribution<long long>(0, tmax - 1)(rng);
    long long j = std::uniform_int_distribution<long long>(0, smax - 1)(rng);

    auto level1 = outer.coset_action(delta, i);
    auto level2 = inner.coset_action(level1.gamma, j);

    Element x = outer.mul(delta, outer.mul(outer.transversal(i), inner.transversal(j)));
    long long i2 = outer.coset_index(x);
    Element y = outer.mul(outer.inv(outer.transversal(i2)), x);
    long long j2 = inner.coset_index(y);
    Element rho = inner.mul(inner.inv(inner.transversal(j2)), y);

    bool ok = i2 == level1.rep_index && j2 == level2.rep_index &&
              element_eq(rho, level2.gamma) && inner.in_gamma(rho);
    if (!ok) {
      if (failure) {
        *failure = outer.name() + "/" + inner.name() +
                   ": chain rule fails at delta=" + element_str(delta) + " i=" + std::to_string(i) +
                   " j=" + std::to_string(j);
      }
      return false;
    }
  }
  return true;
}

}  // namespace cindkit
