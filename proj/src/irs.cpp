#include "cindkit/irs.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cindkit {
namespace {

const Wreath* wreath_view(const GroupInstance& inst) {
  if (auto* w = dynamic_cast<const Wreath*>(&inst)) return w;
  if (auto* bs = dynamic_cast<const BSWitness*>(&inst)) return &bs->quotient();
  return nullptr;
}

std::vector<Element> drop_identities(const GroupInstance& inst, const std::vector<Element>& F) {
  std::vector<Element> out;
  for (const Element& f : F)
    if (!element_eq(f, inst.identity())) out.push_back(f);
  return out;
}

std::vector<Element> conj_all(const GroupInstance& inst, long long t_index,
                              const std::vector<Element>& F) {
  std::vector<Element> out;
  out.reserve(F.size());
  Element t = inst.transversal(t_index);
  for (const Element& f : F) out.push_back(inst.conj(t, f));
  return out;
}

FactorTail classify_finite(const GroupInstance& inst, const AtomicIRS& theta,
                           const std::vector<Element>& F, long long count) {
  FactorTail tail;
  tail.kind = FactorTail::Kind::AllOne;
  tail.note = "finite transversal, every factor listed";
  for (long long i = 0; i < count; ++i)
    tail.exceptional.push_back({i, eval_basic(theta, conj_all(inst, i, F))});
  return tail;
}

FactorTail classify_wreath(const GroupInstance& inst, const Wreath& w, const AtomicIRS& theta,
                           const std::vector<Element>& F) {
  std::set<long long> supports;
  for (const Element& fe : F)
    for (auto& [p, v] : std::get<WreathElem>(fe).support) supports.insert(p);

  Rational far = 0;
  std::set<long long> bad;
  for (const IrsAtom& atom : theta.atoms()) {
    const auto& payload = atom.subgroup.payload();
    if (std::holds_alternative<SubgroupDescriptor::Whole>(payload)) {
      far += atom.weight;
      continue;
    }
    if (std::holds_alternative<SubgroupDescriptor::Trivial>(payload)) {
      continue;  // F has no identities left, so no conjugate ever lands here
    }
    if (auto* sc = std::get_if<SubgroupDescriptor::SupportClosure>(&payload)) {
      bool values_ok = true;
      for (const Element& fe : F) {
        const auto& we = std::get<WreathElem>(fe);
        if (we.shift != 0) values_ok = false;
        for (auto& [p, v] : we.support)
          if (sc->value_modulus > 1 && v % sc->value_modulus != 0) values_ok = false;
      }
      if (!values_ok) continue;  // fails at every index alike
      far += atom.weight;
      for (long long e : sc->excluded)
        for (long long s : supports) bad.insert(enum_int_index(s - e, w.order()));
      continue;
    }
    throw std::runtime_error("refusal: wreath tail undefined for atom " + atom.subgroup.str());
  }

  FactorTail tail;
  for (long long i : bad) tail.exceptional.push_back({i, eval_basic(theta, conj_all(inst, i, F))});
  if (far == 1) {
    tail.kind = FactorTail::Kind::AllOne;
  } else {
    tail.kind = FactorTail::Kind::ConstantBelowOne;
    tail.param = far;
  }
  tail.note = "support translates eventually avoid every excluded position";
  return tail;
}

FactorTail classify_freeprod(const FreeProductKernel& fp, const AtomicIRS& theta,
                             const std::vector<Element>& F) {
  if (fp.qg() == 0)
    throw std::runtime_error("refusal: free-product tail needs a finite first factor");
  Rational far = 0;
  std::set<long long> cand_h;
  for (const IrsAtom& atom : theta.atoms()) {
    const auto& payload = atom.subgroup.payload();
    if (std::holds_alternative<SubgroupDescriptor::Whole>(payload)) {
      far += atom.weight;
      continue;
    }
    if (std::holds_alternative<SubgroupDescriptor::Trivial>(payload)) continue;
    if (auto* ker = std::get_if<SubgroupDescriptor::ExpSumKernel>(&payload)) {
      far += atom.weight;
      for (const Element& fe : F) {
        std::set<long long> h_states{0};
        long long v = 0;
        for (const FpLetter& l : std::get<FpWord>(fe).letters)
          if (l.from_h) h_states.insert(v += l.value);
        for (auto& t : ker->targets)
          for (long long hs : h_states) cand_h.insert(hs - t.second);
      }
      continue;
    }
    throw std::runtime_error("refusal: free-product tail undefined for atom " +
                             atom.subgroup.str());
  }

  std::set<long long> bad;
  for (long long h : cand_h)
    for (long long g = 0; g < fp.qg(); ++g)
      bad.insert(enum_int_index(h, fp.h_order()) * fp.qg() + g);

  FactorTail tail;
  for (long long i : bad) tail.exceptional.push_back({i, eval_basic(theta, conj_all(fp, i, F))});
  if (far == 1) {
    tail.kind = FactorTail::Kind::AllOne;
  } else {
    tail.kind = FactorTail::Kind::ConstantBelowOne;
    tail.param = far;
  }
  tail.note = "conjugated rewrites miss every named commutator far out";
  return tail;
}

struct LampBase {
  long long pos = 0;
  long long value_modulus = 1;
};

LampBase lamp_base(const Wreath& w, const Element& gamma0) {
  const auto& g = std::get<WreathElem>(gamma0);
  if (g.shift != 0 || g.support.size() != 1)
    throw std::invalid_argument("chain base element must be a single lamp");
  auto [pos, val] = *g.support.begin();
  long long q = w.h_modulus();
  long long vm = q == 0 ? (val < 0 ? -val : val) : std::gcd(val, q);
  return {pos, vm};
}

}  // namespace

// --------------------------------------------------------------------------

CertifiedValue CertifiedValue::exact(Rational v) {
  CertifiedValue c;
  c.kind = v == 0 ? Kind::ExactZero : Kind::Exact;
  c.lo = c.hi = std::move(v);
  return c;
}
CertifiedValue CertifiedValue::zero() { return exact(Rational(0)); }
CertifiedValue CertifiedValue::interval(Rational lo, Rational hi) {
  if (lo > hi) throw std::invalid_argument("certified interval: lo > hi");
  if (lo == hi) return exact(std::move(lo));
  CertifiedValue c;
  c.kind = Kind::Interval;
  c.lo = std::move(lo);
  c.hi = std::move(hi);
  return c;
}
std::string CertifiedValue::str() const {
  if (kind == Kind::Interval) return "[" + rational_str(lo) + ", " + rational_str(hi) + "]";
  return rational_str(lo);
}
bool CertifiedValue::definitely_equal(const CertifiedValue& o) const {
  return kind != Kind::Interval && o.kind != Kind::Interval && lo == o.lo;
}
bool CertifiedValue::definitely_distinct(const CertifiedValue& o) const {
  return hi < o.lo || o.hi < lo;
}

AtomicIRS::AtomicIRS(std::vector<IrsAtom> atoms) : atoms_(std::move(atoms)) {
  Rational total = 0;
  for (const IrsAtom& a : atoms_) {
    if (a.weight <= 0) throw std::invalid_argument("atom weights must be positive");
    total += a.weight;
  }
  if (total != 1) throw std::invalid_argument("atom weights must sum to one");
}
AtomicIRS AtomicIRS::dirac(SubgroupDescriptor d) {
  return AtomicIRS({IrsAtom{Rational(1), std::move(d)}});
}
std::string AtomicIRS::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < atoms_.size(); ++i) {
    if (i) os << " + ";
    os << rational_str(atoms_[i].weight) << "@" << atoms_[i].subgroup.str();
  }
  return os.str();
}

Rational eval_basic(const AtomicIRS& theta, const std::vector<Element>& F) {
  Rational total = 0;
  for (const IrsAtom& atom : theta.atoms()) {
    bool in = true, unknown = false;
    for (const Element& f : F) {
      Tri t = atom.subgroup.contains(f);
      if (t == Tri::No) {
        in = false;
        break;
      }
      if (t == Tri::Unknown) unknown = true;
    }
    if (!in) continue;
    if (unknown)
      throw std::runtime_error("refusal: membership undecidable in atom " + atom.subgroup.str());
    total += atom.weight;
  }
  return total;
}

bool kernel_contains(const AtomicIRS& theta, const Element& gamma) {
  return eval_basic(theta, {gamma}) == 1;
}

CertifiedValue product_over_tail(const FactorTail& tail) {
  Rational prefix = 1;
  for (auto& [i, f] : tail.exceptional) {
    if (f == 0) return CertifiedValue::zero();
    prefix *= f;
  }
  switch (tail.kind) {
    case FactorTail::Kind::AllOne:
      return CertifiedValue::exact(prefix);
    case FactorTail::Kind::ConstantBelowOne:
      if (tail.param >= 1) throw std::logic_error("constant tail must sit below one");
      return CertifiedValue::zero();
    case FactorTail::Kind::SummableDeficit: {
      Rational lo = Rational(1) - tail.param;
      if (lo < 0) lo = 0;
      return CertifiedValue::interval(prefix * lo, prefix);
    }
  }
  throw std::logic_error("unreachable");
}

FactorTail classify_factors(const GroupInstance& inst, const AtomicIRS& theta,
                            const std::vector<Element>& F) {
  std::vector<Element> eff = drop_identities(inst, F);
  if (eff.empty()) {
    FactorTail t;
    t.kind = FactorTail::Kind::AllOne;
    t.note = "empty condition";
    return t;
  }
  if (auto count = inst.transversal_count()) return classify_finite(inst, theta, eff, *count);
  if (dynamic_cast<const AmbientInfiniteZ*>(&inst)) {
    Rational p = eval_basic(theta, eff);  // conjugation only flips signs
    FactorTail t;
    if (p == 1) {
      t.kind = FactorTail::Kind::AllOne;
    } else {
      t.kind = FactorTail::Kind::ConstantBelowOne;
      t.param = p;
    }
    t.note = "conjugation acts by sign flips, so the factors are constant";
    return t;
  }
  if (const Wreath* w = wreath_view(inst)) return classify_wreath(inst, *w, theta, eff);
  if (auto* fp = dynamic_cast<const FreeProductKernel*>(&inst))
    return classify_freeprod(*fp, theta, eff);
  throw std::runtime_error("refusal: " + inst.name() + " cannot classify the factor tail");
}

CertifiedValue coinduce_value(const GroupInstance& inst, const AtomicIRS& theta,
                              const std::vector<Element>& F) {
  for (const Element& f : F)
    if (!inst.in_gamma(f)) return CertifiedValue::zero();
  return product_over_tail(classify_factors(inst, theta, F));
}

// --------------------------------------------------------------------------
// chain measures

AtomicIRS chain_theta(const GroupInstance& inst, const Element& gamma0, long long K) {
  if (K < 0) throw std::invalid_argument("chain_theta: K >= 0");
  std::vector<IrsAtom> atoms;
  for (long long k = 0; k < K; ++k)
    atoms.push_back(IrsAtom{pow2(-(k + 1)), inst.chain_subgroup(gamma0, k)});
  atoms.push_back(IrsAtom{pow2(-K), inst.chain_subgroup(gamma0, K)});
  return AtomicIRS(std::move(atoms));
}

AtomicIRS chain_theta_a(const GroupInstance& inst, const Element& gamma0, const Rational& a,
                        long long K) {
  if (K < 2) throw std::invalid_argument("chain_theta_a: K >= 2");
  if (a <= 0 || a > Rational(3, 4))
    throw std::invalid_argument("chain_theta_a: a must lie in (0, 3/4]");
  std::vector<IrsAtom> atoms;
  atoms.push_back(IrsAtom{a, inst.chain_subgroup(gamma0, 0)});
  if (a < Rational(3, 4))
    atoms.push_back(IrsAtom{Rational(3, 4) - a, inst.chain_subgroup(gamma0, 1)});
  for (long long k = 2; k < K; ++k)
    atoms.push_back(IrsAtom{pow2(-(k + 1)), inst.chain_subgroup(gamma0, k)});
  atoms.push_back(IrsAtom{pow2(-K), inst.chain_subgroup(gamma0, K)});
  return AtomicIRS(std::move(atoms));
}

Rational ideal_chain_eval(const GroupInstance& inst, const IdealChainTheta& theta,
                          const std::vector<Element>& F) {
  const Wreath* w = wreath_view(inst);
  if (!w) throw std::runtime_error("refusal: ideal chain lives on the wreath instances");
  LampBase base = lamp_base(*w, theta.gamma0);
  std::vector<Element> eff = drop_identities(inst, F);
  if (eff.empty()) return Rational(1);

  long long first_hit = -1;  // -1: no excluded position ever hit
  for (const Element& fe : eff) {
    const auto& we = std::get<WreathElem>(fe);
    if (we.shift != 0) return Rational(0);
    for (auto& [p, v] : we.support) {
      if (base.value_modulus > 1 && v % base.value_modulus != 0) return Rational(0);
      long long idx = enum_int_index(base.pos - p, w->order());
      if (first_hit < 0 || idx < first_hit) first_hit = idx;
    }
  }
  if (first_hit < 0) return Rational(1);
  return Rational(1) - pow2(-(first_hit + 1));
}

CertifiedValue ideal_chain_coinduce(const GroupInstance& inst, const IdealChainTheta& theta,
                                    const std::vector<Element>& F, long long window) {
  const Wreath* w = wreath_view(inst);
  if (!w) throw std::runtime_error("refusal: ideal chain lives on the wreath instances");
  LampBase base = lamp_base(*w, theta.gamma0);
  std::vector<Element> eff = drop_identities(inst, F);
  for (const Element& fe : eff)
    if (!inst.in_gamma(fe)) return CertifiedValue::zero();
  if (eff.empty()) return CertifiedValue::exact(Rational(1));

  long long reach = 0;
  for (const Element& fe : eff) {
    const auto& we = std::get<WreathElem>(fe);
    for (auto& [p, v] : we.support) {
      long long d = p - base.pos;
      reach = std::max(reach, d < 0 ? -d : d);
    }
  }
  // Past i, every hit index is at least i - 2*reach - 1, so the remaining
  // deficits are dominated by a geometric tail.
  long long cutoff = std::max(window, 2 * reach + 40);
  FactorTail tail;
  tail.kind = FactorTail::Kind::SummableDeficit;
  for (long long i = 0; i < cutoff; ++i) {
    Rational f = ideal_chain_eval(inst, theta, conj_all(inst, i, eff));
    if (f != 1) tail.exceptional.push_back({i, f});
  }
  tail.param = pow2(-(cutoff - 2 * reach - 1));
  tail.note = "geometric deficit bound past the listed factors";
  return product_over_tail(tail);
}

// --------------------------------------------------------------------------
// theta parsing and dispatch

Theta parse_theta(const std::string& spec, const GroupInstance& inst) {
  auto parts = [&] {
    std::vector<std::string> out;
    std::string cur;
    for (char c : spec) {
      if (c == ';') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    out.push_back(cur);
    return out;
  }();
  std::string head = parts[0];
  auto opt = [&](const std::string& key) -> std::optional<std::string> {
    for (size_t i = 1; i < parts.size(); ++i) {
      if (parts[i] == key) return std::string();
      if (parts[i].rfind(key + "=", 0) == 0) return parts[i].substr(key.size() + 1);
    }
    return std::nullopt;
  };

  Theta theta;
  theta.spec = spec;
  size_t colon = head.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("theta spec needs 'kind:args'");
  std::string kind = head.substr(0, colon);
  std::string args = head.substr(colon + 1);

  if (kind == "dirac") {
    if (args == "whole")
      theta.atoms = AtomicIRS::dirac(SubgroupDescriptor::whole());
    else if (args == "trivial")
      theta.atoms = AtomicIRS::dirac(SubgroupDescriptor::trivial());
    else
      throw std::invalid_argument("dirac theta wants 'whole' or 'trivial'");
    return theta;
  }
  if (kind == "mix") {
    // e.g. mix:2^-n@trivial+rest@whole;n=5
    auto plus = args.find('+');
    if (plus == std::string::npos) throw std::invalid_argument("mix theta wants two summands");
    auto parse_summand = [&](const std::string& s) {
      auto at = s.find('@');
      if (at == std::string::npos) throw std::invalid_argument("mix summand wants weight@atom");
      return std::pair<std::string, std::string>{s.substr(0, at), s.substr(at + 1)};
    };
    auto [w1, d1] = parse_summand(args.substr(0, plus));
    auto [w2, d2] = parse_summand(args.substr(plus + 1));
    auto desc = [&](const std::string& d) {
      if (d == "trivial") return SubgroupDescriptor::trivial();
      if (d == "whole") return SubgroupDescriptor::whole();
      throw std::invalid_argument("mix atom wants 'trivial' or 'whole'");
    };
    auto weight = [&](const std::string& ws) -> Rational {
      if (ws == "2^-n") {
        auto n = opt("n");
        if (!n) throw std::invalid_argument("mix weight 2^-n needs ';n=..'");
        return pow2(-std::stoll(*n));
      }
      return parse_rational(ws);
    };
    if (w2 != "rest") throw std::invalid_argument("mix theta wants '...+rest@...'");
    Rational p = weight(w1);
    theta.atoms = AtomicIRS({IrsAtom{p, desc(d1)}, IrsAtom{Rational(1) - p, desc(d2)}});
    return theta;
  }
  if (kind == "chain") {
    if (args != "2^-k-1") throw std::invalid_argument("chain theta wants weights '2^-k-1'");
    long long pos = 0, val = 1;
    if (auto p = opt("pos")) pos = std::stoll(*p);
    if (auto v = opt("val")) val = std::stoll(*v);
    Element gamma0;
    if (const Wreath* w = wreath_view(inst)) {
      gamma0 = w->delta_at(pos, val);
    } else {
      throw std::runtime_error("refusal: chain theta lives on the wreath instances");
    }
    if (auto K = opt("K")) {
      if (auto a = opt("a"))
        theta.atoms = chain_theta_a(inst, gamma0, parse_rational(*a), std::stoll(*K));
      else
        theta.atoms = chain_theta(inst, gamma0, std::stoll(*K));
      return theta;
    }
    if (opt("a")) throw std::invalid_argument("chain theta with 'a' needs ';K=..'");
    theta.kind = Theta::Kind::IdealChain;
    theta.chain = IdealChainTheta{gamma0};
    if (auto w = opt("window")) theta.window = std::stoll(*w);
    return theta;
  }
  if (kind == "lambda") {
    auto* fp = dynamic_cast<const FreeProductKernel*>(&inst);
    if (!fp) throw std::runtime_error("refusal: lambda theta lives on the free-product kernel");
    theta.atoms = freeprod_lambda_theta(*fp, parse_rational(args), opt("weakmix").has_value());
    return theta;
  }
  throw std::invalid_argument("unknown theta kind: " + kind);
}

Rational theta_eval(const GroupInstance& inst, const Theta& theta, const std::vector<Element>& F) {
  if (theta.kind == Theta::Kind::Atomic) return eval_basic(*theta.atoms, F);
  return ideal_chain_eval(inst, *theta.chain, F);
}

CertifiedValue theta_coinduce(const GroupInstance& inst, const Theta& theta,
                              const std::vector<Element>& F) {
  if (theta.kind == Theta::Kind::Atomic) return coinduce_value(inst, *theta.atoms, F);
  return ideal_chain_coinduce(inst, *theta.chain, F, theta.window);
}

// --------------------------------------------------------------------------
// nonatomicity

NonatomicityVerdict nonatomicity_verdict(const GroupInstance& inst, const Theta& theta,
                                         const std::optional<Element>& candidate) {
  if (!inst.index_infinite())
    throw std::invalid_argument("nonatomicity_verdict: the pair must have infinite index");
  NonatomicityVerdict v;

  if (theta.kind == Theta::Kind::IdealChain) {
    Element gamma = candidate.value_or(theta.chain->gamma0);
    if (!inst.in_gamma(gamma) || element_eq(gamma, inst.identity())) {
      v.reason = "candidate must be a nontrivial element of the subgroup";
      return v;
    }
    if (ideal_chain_eval(inst, *theta.chain, {gamma}) == 0) {
      v.reason = "every factor vanishes for the candidate";
      return v;
    }
    v.kind = NonatomicityVerdict::Kind::NonAtomic;
    v.witness = element_str(gamma);
    v.reason =
        "chain kernel is trivial and the candidate's factor deficits are summable and positive";
    return v;
  }

  const AtomicIRS& atoms = *theta.atoms;
  if (atoms.atoms().size() == 1 && atoms.atoms()[0].subgroup.normal_in_ambient()) {
    v.kind = NonatomicityVerdict::Kind::DiracAtom;
    v.atom = atoms.atoms()[0].subgroup.str();
    v.reason = "point mass on a subgroup that is already normal in the ambient group";
    return v;
  }
  if (dynamic_cast<const AmbientInfiniteZ*>(&inst)) {
    std::optional<SubgroupDescriptor> ker = SubgroupDescriptor::whole();
    for (const IrsAtom& a : atoms.atoms()) ker = SubgroupDescriptor::intersect(*ker, a.subgroup);
    if (ker) {
      v.kind = NonatomicityVerdict::Kind::DiracAtom;
      v.atom = ker->str();
      v.reason = "conjugation preserves each subgroup up to sign, so the factors are constant";
      return v;
    }
    v.reason = "kernel of the measure is not representable";
    return v;
  }

  if (!candidate) {
    v.reason = "no candidate element supplied";
    return v;
  }
  const Element& gamma = *candidate;
  if (!inst.in_gamma(gamma) || element_eq(gamma, inst.identity())) {
    v.reason = "candidate must be a nontrivial element of the subgroup";
    return v;
  }

  bool outside_kernel = false, unknown = false;
  for (const IrsAtom& a : atoms.atoms()) {
    Tri t = a.subgroup.contains(gamma);
    if (t == Tri::No) outside_kernel = true;
    if (t == Tri::Unknown) unknown = true;
  }
  if (unknown) {
    v.reason = "membership of the candidate is undecidable in some atom";
    return v;
  }
  if (!outside_kernel) {
    // candidate sits in ker(theta); separate it from the kernel's core if
    // the intersection stays representable
    std::optional<SubgroupDescriptor> ker = SubgroupDescriptor::whole();
    for (const IrsAtom& a : atoms.atoms()) {
      if (!ker) break;
      ker = SubgroupDescriptor::intersect(*ker, a.subgroup);
    }
    bool separated = false;
    if (ker) {
      if (auto* sc = std::get_if<SubgroupDescriptor::SupportClosure>(&ker->payload()))
        separated = !sc->excluded.empty();  // translated exclusions shrink the core to {e}
    }
    if (!separated) {
      v.reason = "candidate is not separated from the kernel core";
      return v;
    }
  }

  FactorTail tail;
  try {
    tail = classify_factors(inst, atoms, {gamma});
  } catch (const std::runtime_error& e) {
    v.reason = e.what();
    return v;
  }
  for (auto& [i, f] : tail.exceptional)
    if (f == 0) {
      v.reason = "a factor vanishes at transversal index " + std::to_string(i);
      return v;
    }
  if (tail.kind == FactorTail::Kind::ConstantBelowOne) {
    v.reason = "factors sit at a constant below one, the deficits are not summable";
    return v;
  }
  v.kind = NonatomicityVerdict::Kind::NonAtomic;
  v.witness = element_str(gamma);
  v.reason = "positive factors with summable deficits";
  return v;
}

Rational pushforward_value(const HomWitness& f, const AtomicIRS& theta,
                           const std::vector<Element>& F) {
  std::vector<Element> mapped;
  mapped.reserve(F.size());
  for (const Element& x : F) mapped.push_back(f.map(x));
  return eval_basic(theta, mapped);
}

// --------------------------------------------------------------------------
// parameter families

AtomicIRS freeprod_lambda_theta(const FreeProductKernel& inst, const Rational& lambda,
                                bool weakmix) {
  if (lambda <= 0 || lambda >= 1)
    throw std::invalid_argument("lambda theta: lambda must lie in (0,1)");
  static const long long kH[4] = {1, 10, 20, 30};
  if (!weakmix) {
    auto star = SubgroupDescriptor::exp_sum_kernel({{1, kH[0]}}, inst.qg(), inst.qh());
    return AtomicIRS(
        {IrsAtom{lambda, SubgroupDescriptor::whole()}, IrsAtom{Rational(1) - lambda, star}});
  }
  Rational p[4] = {lambda, Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  std::vector<IrsAtom> atoms;
  for (int mask = 0; mask < 16; ++mask) {
    Rational weight = 1;
    std::vector<std::pair<long long, long long>> targets;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1 << i)) {
        weight *= Rational(1) - p[i];
        targets.push_back({1, kH[i]});
      } else {
        weight *= p[i];
      }
    }
    if (weight == 0) continue;
    atoms.push_back(
        IrsAtom{weight, SubgroupDescriptor::exp_sum_kernel(targets, inst.qg(), inst.qh())});
  }
  return AtomicIRS(std::move(atoms));
}

DistinguishResult distinguish_family(const GroupInstance& inst, const std::vector<Rational>& params,
                                     bool weakmix, long long K) {
  DistinguishResult out;
  if (auto* fp = dynamic_cast<const FreeProductKernel*>(&inst)) {
    out.family = weakmix ? "lambda mixtures (weak-mixing refinement)" : "lambda mixtures";
    Element probe = fp->commutator(1, 1);
    for (const Rational& lambda : params) {
      AtomicIRS theta = freeprod_lambda_theta(*fp, lambda, weakmix);
      out.rows.push_back({lambda, coinduce_value(inst, theta, {probe})});
    }
  } else if (const Wreath* w = wreath_view(inst)) {
    out.family = "deformed chain measures";
    Element gamma0 = w->delta_at(0, 1);
    for (const Rational& a : params) {
      AtomicIRS theta = chain_theta_a(inst, gamma0, a, K);
      out.rows.push_back({a, coinduce_value(inst, theta, {gamma0})});
    }
  } else {
    throw std::runtime_error("refusal: no parameter family for " + inst.name());
  }
  out.pairwise_distinct = true;
  for (size_t i = 0; i < out.rows.size(); ++i)
    for (size_t j = i + 1; j < out.rows.size(); ++j)
      if (!out.rows[i].value.definitely_distinct(out.rows[j].value)) out.pairwise_distinct = false;
  return out;
}

}  // namespace cindkit
