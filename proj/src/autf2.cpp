#include "cindkit/autf2.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cindkit {

const char* aut_sym_name(AutSym s) {
  switch (s) {
    case AutSym::Phi: return "phi";
    case AutSym::Psi: return "psi";
    case AutSym::Chi: return "chi";
    case AutSym::Xi: return "xi";
    case AutSym::Tau: return "tau";
    case AutSym::PhiInv: return "phi^-1";
    default: return "psi^-1";
  }
}

Endo::Endo() : image_a_(Word::parse("a")), image_b_(Word::parse("b")) {}

Endo::Endo(Word image_a, Word image_b, std::vector<AutSym> provenance)
    : image_a_(std::move(image_a)), image_b_(std::move(image_b)), prov_(std::move(provenance)) {
  if (image_a_.rank() != 2 || image_b_.rank() != 2)
    throw std::invalid_argument("endomorphism images must live in F_2");
}

Word Endo::apply(const Word& x) const {
  if (x.rank() != 2) throw std::invalid_argument("rank mismatch in endomorphism application");
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(x.length() * (image_a_.length() + image_b_.length())));
  std::vector<Letter> img[2] = {image_a_.letters(), image_b_.letters()};
  auto push = [&out](Letter c) {
    if (!out.empty() && out.back() == letter_inverse(c)) out.pop_back();
    else out.push_back(c);
  };
  for (const Run& r : x.runs()) {
    const std::vector<Letter>& w = img[r.gen];
    long long k = r.exp < 0 ? -r.exp : r.exp;
    for (long long i = 0; i < k; ++i) {
      if (r.exp > 0)
        for (Letter c : w) push(c);
      else
        for (auto it = w.rbegin(); it != w.rend(); ++it) push(letter_inverse(*it));
    }
  }
  return Word::from_letters(out, 2);
}

Endo elementary(AutSym s) {
  switch (s) {
    case AutSym::Phi: return Endo(Word::parse("a b"), Word::parse("b"), {AutSym::Phi});
    case AutSym::Psi: return Endo(Word::parse("a"), Word::parse("b a"), {AutSym::Psi});
    case AutSym::Chi: return Endo(Word::parse("a"), Word::parse("b^-1"), {AutSym::Chi});
    case AutSym::Xi: return Endo(Word::parse("a^-1"), Word::parse("b"), {AutSym::Xi});
    case AutSym::Tau: return Endo(Word::parse("b"), Word::parse("a"), {AutSym::Tau});
    case AutSym::PhiInv: return Endo(Word::parse("a b^-1"), Word::parse("b"), {AutSym::PhiInv});
    default: return Endo(Word::parse("a"), Word::parse("b a^-1"), {AutSym::PsiInv});
  }
}

Endo aut_phi() { return elementary(AutSym::Phi); }
Endo aut_psi() { return elementary(AutSym::Psi); }
Endo aut_chi() { return elementary(AutSym::Chi); }
Endo aut_xi() { return elementary(AutSym::Xi); }
Endo aut_tau() { return elementary(AutSym::Tau); }

Endo compose(const Endo& f, const Endo& g) {
  std::vector<AutSym> prov = f.provenance();
  prov.insert(prov.end(), g.provenance().begin(), g.provenance().end());
  return Endo(f.apply(g.image_a()), f.apply(g.image_b()), std::move(prov));
}

Endo Endo::inverse() const {
  static const Endo id;
  if (*this == id) return Endo();
  if (prov_.empty()) throw std::invalid_argument("inverse requires provenance");
  Endo acc;
  for (auto it = prov_.rbegin(); it != prov_.rend(); ++it) {
    AutSym inv;
    switch (*it) {
      case AutSym::Phi: inv = AutSym::PhiInv; break;
      case AutSym::Psi: inv = AutSym::PsiInv; break;
      case AutSym::PhiInv: inv = AutSym::Phi; break;
      case AutSym::PsiInv: inv = AutSym::Psi; break;
      default: inv = *it; break;  // chi, xi, tau are involutions
    }
    acc = compose(acc, elementary(inv));
  }
  return acc;
}

std::string Endo::provenance_str() const {
  if (prov_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < prov_.size(); ++i) {
    if (i) out << ' ';
    out << aut_sym_name(prov_[i]);
  }
  return out.str();
}

Endo parse_provenance(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Endo acc;
  while (in >> tok) {
    if (tok == "1") continue;
    long long rep = 1;
    std::size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      try {
        rep = std::stoll(tok.substr(caret + 1));
      } catch (...) {
        throw std::invalid_argument("bad exponent in '" + tok + "'");
      }
      if (rep < 1) throw std::invalid_argument("exponent must be positive in '" + tok + "'");
      tok = tok.substr(0, caret);
    }
    AutSym s;
    if (tok == "phi") s = AutSym::Phi;
    else if (tok == "psi") s = AutSym::Psi;
    else if (tok == "chi") s = AutSym::Chi;
    else if (tok == "xi") s = AutSym::Xi;
    else if (tok == "tau") s = AutSym::Tau;
    else throw std::invalid_argument("unknown automorphism symbol '" + tok + "'");
    for (long long r = 0; r < rep; ++r) acc = compose(acc, elementary(s));
  }
  return acc;
}

std::vector<Endo> enumerate_frplus(int max_len) {
  if (max_len < 0) throw std::invalid_argument("negative truncation length");
  std::vector<Endo> out{Endo()};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      out.push_back(compose(out[i], aut_phi()));
      out.push_back(compose(out[i], aut_psi()));
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<Endo> transversal_R(int max_len) {
  std::vector<Endo> fr = enumerate_frplus(max_len);
  std::vector<Endo> out;
  for (int shape = 0; shape < 16; ++shape) {
    bool sigma_shape = shape & 1, has_tau = shape & 2, has_xi = shape & 4, has_chi = shape & 8;
    for (std::size_t i = 0; i < fr.size(); ++i) {
      if (sigma_shape && i == 0) continue;  // sigma ranges over Fr+ \ {1}
      Endo e = sigma_shape ? compose(aut_xi(), fr[i]) : fr[i];
      if (has_tau) e = compose(e, aut_tau());
      if (has_xi) e = compose(e, aut_xi());
      if (has_chi) e = compose(e, aut_chi());
      out.push_back(std::move(e));
    }
  }
  return out;
}

const char* fr_class_name(FrClass c) {
  switch (c) {
    case FrClass::Identity: return "identity";
    case FrClass::APhi0: return "A_phi^0";
    case FrClass::APsi0: return "A_psi^0";
    default: return "A^1";
  }
}

Classification classify(const Endo& f) {
  bool any_phi = false, any_psi = false;
  for (AutSym s : f.provenance()) {
    if (s == AutSym::Phi) any_phi = true;
    else if (s == AutSym::Psi) any_psi = true;
    else throw std::invalid_argument("classify expects a member of the positive monoid");
  }
  Classification c{};
  if (!any_phi && !any_psi) c.cls = FrClass::Identity;
  else if (!any_psi) c.cls = FrClass::APhi0;
  else if (!any_phi) c.cls = FrClass::APsi0;
  else c.cls = FrClass::A1;
  if (!f.provenance().empty()) {
    c.leftmost_phi = f.provenance().front() == AutSym::Phi;
    c.leftmost_psi = f.provenance().front() == AutSym::Psi;
  }
  return c;
}

namespace {

// x = prefix . core . prefix^-1 with core cyclically reduced
void conjugacy_split(const Word& x, std::vector<Letter>& prefix, std::vector<Letter>& core) {
  std::vector<Letter> ls = x.letters();
  std::size_t lo = 0, hi = ls.size();
  prefix.clear();
  while (hi - lo >= 2 && ls[lo] == letter_inverse(ls[hi - 1])) {
    prefix.push_back(ls[lo]);
    ++lo;
    --hi;
  }
  core.assign(ls.begin() + lo, ls.begin() + hi);
}

}  // namespace

std::optional<Word> inner_word(const Endo& f) {
  std::vector<Letter> pa, ca, pb, cb;
  conjugacy_split(f.image_a(), pa, ca);
  conjugacy_split(f.image_b(), pb, cb);
  if (ca.size() != 1 || ca[0] != letter_code(0, false)) return std::nullopt;
  if (cb.size() != 1 || cb[0] != letter_code(1, false)) return std::nullopt;
  const Word a = Word::parse("a"), b = Word::parse("b");
  for (const auto& cand : {pa, pb}) {
    Word u = Word::from_letters(cand, 2);
    if (u * a * u.inverse() == f.image_a() && u * b * u.inverse() == f.image_b()) return u;
  }
  return std::nullopt;
}

}  // namespace cindkit
