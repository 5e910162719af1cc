#include "braidkit/comodule.hpp"

#include <functional>

#include "braidkit/error.hpp"

namespace braidkit {

namespace {

/// Multiplies two adjacent slots of the same algebra into one.
NcElement merge_slots(const NcElement& u, std::size_t first) {
  const Signature image{u.signature().at(first)};
  return map_slots(u, first, 2, image, [&](std::span<const Word> w) {
    return NcElement::term(image, {w[0] + w[1]});
  });
}

}  // namespace

ComoduleAlgebra::ComoduleAlgebra(PresentationPtr algebra, std::map<GenId, NcElement> coaction, DqtHopfPtr over)
    : algebra_(std::move(algebra)), coaction_(std::move(coaction)), over_(std::move(over)) {
  for (std::size_t g = 0; g < alphabet().size(); ++g) {
    if (!coaction_.count(static_cast<GenId>(g))) {
      throw Error(ErrorKind::MissingEntry, "no coaction for " + alphabet().generator(static_cast<GenId>(g)));
    }
  }
}

NcElement ComoduleAlgebra::coact_word(const Word& w) const {
  NcElement out = NcElement::one(coaction_signature());
  for (GenId g : w) out = tensor_mul(out, coaction_.at(g));
  return out;
}

NcElement ComoduleAlgebra::coact(const NcElement& u) const {
  NcElement b = map_slots(u, 0, 1, coaction_signature(), [&](std::span<const Word> w) { return coact_word(w[0]); });
  const Presentation* slots[] = {algebra_.get(), &over_->algebra()};
  return normal_form(b, slots);
}

NcElement braiding(const ComoduleAlgebra& v, const ComoduleAlgebra& w, const NcElement& vw) {
  if (vw.slots() != 2 || vw.signature()[0] != &v.alphabet() || vw.signature()[1] != &w.alphabet()) {
    throw Error(ErrorKind::SignatureMismatch, "braiding: argument is not in V(x)W");
  }
  if (&v.over() != &w.over()) throw Error(ErrorKind::SignatureMismatch, "braiding: comodules over different algebras");
  const DqtHopf& h = v.over();
  const Signature out_sig{&w.alphabet(), &v.alphabet()};
  NcElement out = map_slots(vw, 0, 2, out_sig, [&](std::span<const Word> pair) {
    const NcElement cv = v.coact(NcElement::term(v.signature(), {pair[0]}));
    const NcElement cw = w.coact(NcElement::term(w.signature(), {pair[1]}));
    NcElement r(out_sig);
    for (const auto& [tv, sv] : cv.terms()) {
      for (const auto& [tw, sw] : cw.terms()) {
        const Scalar rv = h.eval_R(tv[1], tw[1]);
        if (!rv.is_zero()) r.add_term(TensorWord{tw[0], tv[0]}, sv * sw * rv);
      }
    }
    return r;
  });
  const Presentation* slots[] = {&w.algebra(), &v.algebra()};
  return normal_form(out, slots);
}

NcElement inverse_braiding(const ComoduleAlgebra& v, const ComoduleAlgebra& w, const NcElement& wv) {
  if (wv.slots() != 2 || wv.signature()[0] != &w.alphabet() || wv.signature()[1] != &v.alphabet()) {
    throw Error(ErrorKind::SignatureMismatch, "inverse_braiding: argument is not in W(x)V");
  }
  const DqtHopf& h = v.over();
  const Signature out_sig{&v.alphabet(), &w.alphabet()};
  NcElement out = map_slots(wv, 0, 2, out_sig, [&](std::span<const Word> pair) {
    const NcElement cw = w.coact(NcElement::term(w.signature(), {pair[0]}));
    const NcElement cv = v.coact(NcElement::term(v.signature(), {pair[1]}));
    NcElement r(out_sig);
    for (const auto& [tv, sv] : cv.terms()) {
      for (const auto& [tw, sw] : cw.terms()) {
        const Scalar rv = h.eval_R_inverse(tv[1], tw[1]);
        if (!rv.is_zero()) r.add_term(TensorWord{tv[0], tw[0]}, sv * sw * rv);
      }
    }
    return r;
  });
  const Presentation* slots[] = {&v.algebra(), &w.algebra()};
  return normal_form(out, slots);
}

NcElement induced_action(const ComoduleAlgebra& v, const NcElement& b, const NcElement& h) {
  const NcElement cb = v.coact(b);
  NcElement out(v.signature());
  for (const auto& [t, c] : cb.terms()) {
    const Scalar r = v.over().eval_R(NcElement::term(v.over().signature(), {t[1]}), h);
    if (!r.is_zero()) out.add_term(TensorWord{t[0]}, c * r);
  }
  return v.algebra().normal_form(out);
}

BraidedHopf::BraidedHopf(PresentationPtr algebra, std::map<GenId, NcElement> coaction, DqtHopfPtr over, Tables tables)
    : ComoduleAlgebra(std::move(algebra), std::move(coaction), std::move(over)), tables_(std::move(tables)) {
  check_complete();
}

void BraidedHopf::check_complete() const {
  for (std::size_t g = 0; g < alphabet().size(); ++g) {
    const auto id = static_cast<GenId>(g);
    const std::string& name = alphabet().generator(id);
    if (!tables_.coproduct.count(id)) throw Error(ErrorKind::MissingEntry, "no coproduct for " + name);
    if (!tables_.counit.count(id)) throw Error(ErrorKind::MissingEntry, "no counit for " + name);
    if (!tables_.antipode.count(id)) throw Error(ErrorKind::MissingEntry, "no antipode for " + name);
  }
}

void BraidedHopf::set_tables(Tables tables) {
  tables_ = std::move(tables);
  check_complete();
  const std::lock_guard lock(cache_mutex_);
  coproduct_cache_.clear();
  antipode_cache_.clear();
}

NcElement BraidedHopf::coproduct_word(const Word& w) const {
  {
    const std::lock_guard lock(cache_mutex_);
    if (auto it = coproduct_cache_.find(w); it != coproduct_cache_.end()) return it->second;
  }
  NcElement result;
  if (w.empty()) {
    result = NcElement::one(signature(2));
  } else if (w.size() == 1) {
    result = algebra().normal_form(tables_.coproduct.at(w[0]));
  } else {
    const BraidedTensorAlgebra square({this, this});
    result = square.product(coproduct_word(w.substr(0, w.size() - 1)), tables_.coproduct.at(w.back()));
  }
  const std::lock_guard lock(cache_mutex_);
  coproduct_cache_.emplace(w, result);
  return result;
}

NcElement BraidedHopf::coproduct(const NcElement& u) const {
  NcElement out(signature(2));
  for (const auto& [w, c] : u.terms()) out += c * coproduct_word(w[0]);
  return out;
}

Scalar BraidedHopf::counit_word(const Word& w) const {
  Scalar s = 1;
  for (GenId g : w) {
    s *= tables_.counit.at(g);
    if (s.is_zero()) break;
  }
  return s;
}

Scalar BraidedHopf::counit(const NcElement& u) const {
  Scalar s;
  for (const auto& [w, c] : u.terms()) s += c * counit_word(w[0]);
  return s;
}

NcElement BraidedHopf::antipode_word(const Word& w) const {
  {
    const std::lock_guard lock(cache_mutex_);
    if (auto it = antipode_cache_.find(w); it != antipode_cache_.end()) return it->second;
  }
  NcElement result;
  if (w.empty()) {
    result = NcElement::one(signature());
  } else if (w.size() == 1) {
    result = algebra().normal_form(tables_.antipode.at(w[0]));
  } else {
    const NcElement pair = tensor(antipode_word(w.substr(0, 1)), antipode_word(w.substr(1)));
    result = algebra().normal_form(merge_slots(braiding(*this, *this, pair), 0));
  }
  const std::lock_guard lock(cache_mutex_);
  antipode_cache_.emplace(w, result);
  return result;
}

NcElement BraidedHopf::antipode(const NcElement& u) const {
  NcElement out(signature());
  for (const auto& [w, c] : u.terms()) out += c * antipode_word(w[0]);
  return out;
}

BraidedTensorAlgebra::BraidedTensorAlgebra(std::vector<const ComoduleAlgebra*> factors) : factors_(std::move(factors)) {
  for (const auto* f : factors_) {
    if (&f->over() != &factors_.front()->over()) {
      throw Error(ErrorKind::SignatureMismatch, "braided tensor factors comodule over different algebras");
    }
  }
}

Signature BraidedTensorAlgebra::signature() const {
  Signature sig;
  for (const auto* f : factors_) sig.push_back(&f->alphabet());
  return sig;
}

NcElement BraidedTensorAlgebra::normal_form(const NcElement& u) const {
  std::vector<const Presentation*> slots;
  for (const auto* f : factors_) slots.push_back(&f->algebra());
  return braidkit::normal_form(u, slots);
}

NcElement BraidedTensorAlgebra::product(const NcElement& u, const NcElement& v) const {
  const Signature sig = signature();
  if (u.signature() != sig || v.signature() != sig) {
    throw Error(ErrorKind::SignatureMismatch, "braided product: operands outside the braided tensor algebra");
  }
  using Piece = std::pair<std::size_t, Word>;  // (factor, word)
  std::map<std::tuple<std::size_t, std::size_t, Word, Word>, NcElement> psi_cache;
  NcElement out(sig);

  // Bubble later-factor pieces leftwards through Ψ until factors appear in order.
  std::function<void(std::vector<Piece>&, const Scalar&)> settle = [&](std::vector<Piece>& seq, const Scalar& c) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      if (seq[k].first <= seq[k + 1].first) continue;
      const auto [i, p] = seq[k];
      const auto [j, r] = seq[k + 1];
      auto key = std::tuple{i, j, p, r};
      auto it = psi_cache.find(key);
      if (it == psi_cache.end()) {
        const ComoduleAlgebra& fi = *factors_[i];
        const ComoduleAlgebra& fj = *factors_[j];
        const NcElement arg = NcElement::term({&fi.alphabet(), &fj.alphabet()}, {p, r});
        it = psi_cache.emplace(key, braiding(fi, fj, arg)).first;
      }
      for (const auto& [tw, tc] : it->second.terms()) {
        std::vector<Piece> next(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k));
        if (!tw[0].empty()) next.emplace_back(j, tw[0]);
        if (!tw[1].empty()) next.emplace_back(i, tw[1]);
        next.insert(next.end(), seq.begin() + static_cast<std::ptrdiff_t>(k + 2), seq.end());
        settle(next, c * tc);
      }
      return;
    }
    TensorWord tw(sig.size());
    for (const auto& [f, w] : seq) tw[f] += w;
    out.add_term(std::move(tw), c);
  };

  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      std::vector<Piece> seq;
      for (std::size_t f = 0; f < sig.size(); ++f) {
        if (!wu[f].empty()) seq.emplace_back(f, wu[f]);
      }
      for (std::size_t f = 0; f < sig.size(); ++f) {
        if (!wv[f].empty()) seq.emplace_back(f, wv[f]);
      }
      settle(seq, cu * cv);
    }
  }
  return normal_form(out);
}

NcElement antipode_product_law(const BraidedHopf& b, const NcElement& x, const NcElement& y) {
  const NcElement cx = b.coact(x);
  const NcElement cy = b.coact(y);
  NcElement out(b.signature());
  for (const auto& [tx, sx] : cx.terms()) {
    for (const auto& [ty, sy] : cy.terms()) {
      const Scalar r = b.over().eval_R(tx[1], ty[1]);
      if (r.is_zero()) continue;
      const NcElement sb = b.antipode_word(tx[0]);
      const NcElement sc = b.antipode_word(ty[0]);
      out += (sx * sy * r) * tensor_mul(sc, sb);
    }
  }
  return b.algebra().normal_form(out);
}

}  // namespace braidkit
