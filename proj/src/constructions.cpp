#include "braidkit/constructions.hpp"

#include <tuple>

#include "braidkit/error.hpp"
#include "braidkit/linsolve.hpp"

namespace braidkit {

namespace {

/// Δ²(w) by the free extension, three slots, not normalized.
NcElement coproduct3_word(const HopfAlgebra& h, const Word& w) {
  return map_slots(h.coproduct_word(w), 1, 1, h.signature(2),
                   [&](std::span<const Word> x) { return h.coproduct_word(x[0]); });
}

NcElement word_element(const Signature& sig, const Word& w) { return NcElement::term(sig, {w}); }

}  // namespace

NcElement adjoint_coaction(const HopfAlgebra& h, const NcElement& u) {
  const Signature two = h.signature(2);
  NcElement out = map_slots(u, 0, 1, two, [&](std::span<const Word> w) {
    NcElement r(two);
    for (const auto& [t, c] : coproduct3_word(h, w[0]).terms()) {
      const NcElement left = h.antipode_word(t[0]);
      for (const auto& [lw, lc] : left.terms()) r.add_term(TensorWord{t[1], lw[0] + t[2]}, c * lc);
    }
    return r;
  });
  return h.algebra().normal_form(out);
}

NcElement transmuted_product(const DqtHopf& h, const NcElement& u, const NcElement& v) {
  const Signature one = h.signature();
  std::map<std::tuple<Word, Word, Word>, Scalar> r_cache;
  NcElement out(one);
  for (const auto& [uw, uc] : u.terms()) {
    const NcElement du = coproduct3_word(h, uw[0]);
    for (const auto& [vw, vc] : v.terms()) {
      const NcElement dv = h.coproduct_word(vw[0]);
      for (const auto& [a, ac] : du.terms()) {
        for (const auto& [b, bc] : dv.terms()) {
          auto key = std::tuple{a[0], a[2], b[0]};
          auto it = r_cache.find(key);
          if (it == r_cache.end()) {
            const NcElement left = h.algebra().multiply(h.antipode_word(a[0]), word_element(one, a[2]));
            it = r_cache.emplace(key, h.eval_R(left, h.antipode_word(b[0]))).first;
          }
          if (it->second.is_zero()) continue;
          out.add_term(TensorWord{a[1] + b[1]}, uc * vc * ac * bc * it->second);
        }
      }
    }
  }
  return h.algebra().normal_form(out);
}

NcElement transmuted_eval(const DqtHopf& h, const NcElement& u, const std::map<GenId, NcElement>& letters) {
  NcElement out(h.signature());
  for (const auto& [w, c] : u.terms()) {
    NcElement acc = NcElement::one(h.signature());
    for (GenId g : w[0]) {
      auto it = letters.find(g);
      if (it == letters.end()) throw Error(ErrorKind::MissingEntry, "no identification for a letter");
      acc = transmuted_product(h, acc, it->second);
    }
    out += c * acc;
  }
  return out;
}

ActionFn induced_action_fn(std::shared_ptr<const ComoduleAlgebra> b) {
  return [b](const Word& bw, const Word& hw) {
    return induced_action(*b, word_element(b->signature(), bw), word_element(b->over().signature(), hw));
  };
}

ActionFn table_action(std::shared_ptr<const HopfAlgebra> h, std::shared_ptr<const ComoduleAlgebra> b,
                      std::map<std::pair<GenId, GenId>, NcElement> table) {
  struct State {
    std::shared_ptr<const HopfAlgebra> h;
    std::shared_ptr<const ComoduleAlgebra> b;
    std::map<std::pair<GenId, GenId>, NcElement> table;
    std::mutex mutex;
    std::map<std::pair<Word, Word>, NcElement> cache;
  };
  auto state = std::make_shared<State>();
  state->h = std::move(h);
  state->b = std::move(b);
  state->table = std::move(table);

  auto act = std::make_shared<ActionFn>();
  std::weak_ptr<ActionFn> self = act;
  *act = [state, self](const Word& bw, const Word& hw) -> NcElement {
    const Presentation& alg = state->b->algebra();
    const Signature sig = state->b->signature();
    {
      const std::lock_guard lock(state->mutex);
      if (auto it = state->cache.find({bw, hw}); it != state->cache.end()) return it->second;
    }
    auto recurse = self.lock();
    NcElement result(sig);
    if (hw.empty()) {
      result = alg.normal_form(word_element(sig, bw));
    } else if (hw.size() >= 2) {
      // b◁(h g) = (b◁h)◁g
      const NcElement first = (*recurse)(bw, hw.substr(0, hw.size() - 1));
      for (const auto& [t, c] : first.terms()) result += c * (*recurse)(t[0], hw.substr(hw.size() - 1));
    } else if (bw.empty()) {
      result = NcElement::scalar(sig, state->h->counit_word(hw));
    } else if (bw.size() >= 2) {
      // (b c)◁h = sum (b◁h1)(c◁h2)
      for (const auto& [t, c] : state->h->coproduct_word(hw).terms()) {
        const NcElement left = (*recurse)(bw.substr(0, bw.size() - 1), t[0]);
        if (left.is_zero()) continue;
        result += c * tensor_mul(left, (*recurse)(bw.substr(bw.size() - 1), t[1]));
      }
      result = alg.normal_form(result);
    } else {
      auto it = state->table.find({bw[0], hw[0]});
      if (it == state->table.end()) {
        throw Error(ErrorKind::MissingEntry, "action has no entry for " + state->b->alphabet().generator(bw[0]) +
                                                 "," + state->h->alphabet().generator(hw[0]));
      }
      result = alg.normal_form(it->second);
    }
    const std::lock_guard lock(state->mutex);
    state->cache.emplace(std::pair{bw, hw}, result);
    return result;
  };
  // The returned wrapper keeps the recursive closure alive.
  return [act](const Word& bw, const Word& hw) { return (*act)(bw, hw); };
}

std::vector<CrossedModuleResidual> crossed_module_residuals(const ComoduleAlgebra& b, const ActionFn& act) {
  const DqtHopf& h = b.over();
  const Signature bh = b.coaction_signature();
  const Presentation* slots[] = {&b.algebra(), &h.algebra()};
  std::vector<CrossedModuleResidual> out;
  for (std::size_t bi = 0; bi < b.alphabet().size(); ++bi) {
    const auto bg = static_cast<GenId>(bi);
    const NcElement cv = b.coact(word_element(b.signature(), Word(1, bg)));
    for (std::size_t hi = 0; hi < h.alphabet().size(); ++hi) {
      const auto hg = static_cast<GenId>(hi);
      const NcElement dh = h.coproduct(word_element(h.signature(), Word(1, hg)));
      NcElement diff(bh);
      for (const auto& [t, c] : dh.terms()) {
        // sum v^(1)◁h1 (x) v^(2) h2
        for (const auto& [v, vc] : cv.terms()) {
          const NcElement left = act(v[0], t[0]);
          for (const auto& [l, lc] : left.terms()) diff.add_term(TensorWord{l[0], v[1] + t[1]}, c * vc * lc);
        }
        // - sum (v◁h2)^(1) (x) h1 (v◁h2)^(2)
        const NcElement moved = b.coact(act(Word(1, bg), t[1]));
        for (const auto& [m, mc] : moved.terms()) diff.add_term(TensorWord{m[0], t[0] + m[1]}, -(c * mc));
      }
      out.push_back({bg, hg, normal_form(diff, slots)});
    }
  }
  return out;
}

SmashHopf::SmashHopf(std::shared_ptr<const BraidedHopf> b, ActionFn act) : b_(std::move(b)), act_(std::move(act)) {}

Signature SmashHopf::signature() const { return {&hopf().alphabet(), &b_->alphabet()}; }

Signature SmashHopf::coproduct_signature() const {
  return {&hopf().alphabet(), &b_->alphabet(), &hopf().alphabet(), &b_->alphabet()};
}

NcElement SmashHopf::from_hopf(const NcElement& h) const {
  const std::size_t at[] = {0};
  return embed(h, signature(), at);
}

NcElement SmashHopf::from_braided(const NcElement& b) const {
  const std::size_t at[] = {1};
  return embed(b, signature(), at);
}

NcElement SmashHopf::act(const NcElement& b, const NcElement& h) const {
  NcElement out(b_->signature());
  for (const auto& [bw, bc] : b.terms()) {
    for (const auto& [hw, hc] : h.terms()) out += (bc * hc) * act_(bw[0], hw[0]);
  }
  return b_->algebra().normal_form(out);
}

NcElement SmashHopf::normal_form(const NcElement& u) const {
  const Presentation* slots[] = {&hopf().algebra(), &b_->algebra()};
  return braidkit::normal_form(u, slots);
}

NcElement SmashHopf::product_words(const TensorWord& u, const TensorWord& v) const {
  {
    const std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->products.find({u, v}); it != cache_->products.end()) return it->second;
  }
  const Signature sig = signature();
  NcElement out(sig);
  const NcElement dg = hopf().coproduct(word_element(hopf().signature(), v[0]));
  for (const auto& [t, c] : dg.terms()) {
    const NcElement moved = act_(u[1], t[1]);
    for (const auto& [m, mc] : moved.terms()) out.add_term(TensorWord{u[0] + t[0], m[0] + v[1]}, c * mc);
  }
  out = normal_form(out);
  const std::lock_guard lock(cache_->mutex);
  cache_->products.emplace(std::pair{u, v}, out);
  return out;
}

NcElement SmashHopf::product(const NcElement& u, const NcElement& v) const {
  if (u.signature() != signature() || v.signature() != signature()) {
    throw Error(ErrorKind::SignatureMismatch, "smash product: operands are not in H(x)B");
  }
  NcElement out(signature());
  for (const auto& [uw, uc] : u.terms()) {
    for (const auto& [vw, vc] : v.terms()) out += (uc * vc) * product_words(uw, vw);
  }
  return out;
}

NcElement SmashHopf::coproduct(const NcElement& u) const {
  const Signature sig = coproduct_signature();
  NcElement out(sig);
  for (const auto& [w, c] : u.terms()) {
    const NcElement dh = hopf().coproduct(word_element(hopf().signature(), w[0]));
    const NcElement db = b_->coproduct_word(w[1]);
    for (const auto& [bt, bc] : db.terms()) {
      const NcElement co = b_->coact(word_element(b_->signature(), bt[0]));
      for (const auto& [ht, hc] : dh.terms()) {
        for (const auto& [ct, cc] : co.terms()) {
          out.add_term(TensorWord{ht[0], ct[0], ht[1] + ct[1], bt[1]}, c * bc * hc * cc);
        }
      }
    }
  }
  const Presentation* slots[] = {&hopf().algebra(), &b_->algebra(), &hopf().algebra(), &b_->algebra()};
  return braidkit::normal_form(out, slots);
}

Scalar SmashHopf::counit(const NcElement& u) const {
  Scalar s;
  for (const auto& [w, c] : u.terms()) s += c * hopf().counit_word(w[0]) * b_->counit_word(w[1]);
  return s;
}

NcElement SmashHopf::antipode_braided_word(const Word& b) const {
  if (!antipode_) throw Error(ErrorKind::MissingEntry, "bosonisation antipode has not been solved");
  NcElement out = NcElement::one(signature());
  for (auto it = b.rbegin(); it != b.rend(); ++it) out = product(out, antipode_->values.at(*it));
  return out;
}

NcElement SmashHopf::antipode(const NcElement& u) const {
  NcElement out(signature());
  for (const auto& [w, c] : u.terms()) {
    const NcElement sh = from_hopf(hopf().antipode_word(w[0]));
    out += c * product(antipode_braided_word(w[1]), sh);
  }
  return out;
}

const SmashHopf::AntipodeSolution& SmashHopf::solve_antipode(std::size_t h_length) {
  const Signature sig = signature();
  const std::vector<Word> h_words = hopf().algebra().normal_words(h_length);
  const std::vector<Word> b_words = b_->algebra().normal_words(1);
  std::vector<TensorWord> basis;
  for (const auto& hw : h_words) {
    for (const auto& bw : b_words) basis.push_back({hw, bw});
  }
  const std::size_t nb = basis.size();
  const std::size_t ngen = b_->alphabet().size();
  LinearSystem system(nb * ngen);

  // Each equation row is keyed by an output word; unknown j of generator y is y*nb + j.
  struct Row {
    std::map<std::size_t, Scalar> coeffs;
    Scalar rhs;
  };
  for (std::size_t xi = 0; xi < ngen; ++xi) {
    const auto x = static_cast<GenId>(xi);
    const NcElement one_x = from_braided(word_element(b_->signature(), Word(1, x)));
    const NcElement delta = coproduct(one_x);
    const Scalar eps = counit(one_x);
    for (int side = 0; side < 2; ++side) {
      std::map<TensorWord, Row, TensorWordLess> rows;
      rows[TensorWord{Word(), Word()}].rhs = eps;
      auto add_known = [&](const NcElement& e, const Scalar& c) {
        for (const auto& [w, wc] : e.terms()) rows[w].rhs -= c * wc;
      };
      auto add_unknown = [&](GenId y, const std::function<NcElement(const NcElement&)>& around, const Scalar& c) {
        for (std::size_t j = 0; j < nb; ++j) {
          const NcElement e = around(NcElement::term(sig, basis[j]));
          for (const auto& [w, wc] : e.terms()) rows[w].coeffs[y * nb + j] += c * wc;
        }
      };
      for (const auto& [t, c] : delta.terms()) {
        const NcElement first = NcElement::term(sig, {t[0], t[1]});
        const NcElement second = NcElement::term(sig, {t[2], t[3]});
        if (side == 0) {
          // sum S(first) second; first = h1 (x) b with h1 from Δ(1)
          if (!t[0].empty()) throw Error(ErrorKind::SingularSystem, "unexpected H-leg in Δ(1(x)x)");
          if (t[1].empty()) {
            add_known(second, c);
          } else if (t[1].size() == 1) {
            add_unknown(t[1][0], [&](const NcElement& s) { return product(s, second); }, c);
          } else {
            throw Error(ErrorKind::SingularSystem, "coproduct leg of degree > 1; antipode ansatz is linear");
          }
        } else {
          // sum first S(second); S(h (x) b) = S(1(x)b) (S h (x) 1)
          const NcElement sh = from_hopf(hopf().antipode_word(t[2]));
          if (t[3].empty()) {
            add_known(product(first, sh), c);
          } else if (t[3].size() == 1) {
            add_unknown(t[3][0], [&](const NcElement& s) { return product(product(first, s), sh); }, c);
          } else {
            throw Error(ErrorKind::SingularSystem, "coproduct leg of degree > 1; antipode ansatz is linear");
          }
        }
      }
      for (auto& [w, row] : rows) {
        std::map<std::size_t, Scalar> coeffs;
        for (auto& [k, v] : row.coeffs) {
          if (!v.is_zero()) coeffs.emplace(k, v);
        }
        if (coeffs.empty() && row.rhs.is_zero()) continue;
        system.add_equation(coeffs, row.rhs);
      }
    }
  }

  const auto sol = system.solve();
  if (!sol.consistent) {
    throw Error(ErrorKind::SingularSystem, "antipode equations have no solution in the ansatz span");
  }
  AntipodeSolution out;
  out.unique = sol.unique;
  out.unknowns = system.unknowns();
  out.rank = sol.rank;
  for (std::size_t xi = 0; xi < ngen; ++xi) {
    NcElement value(sig);
    for (std::size_t j = 0; j < nb; ++j) {
      const auto s = sol.values[xi * nb + j].to_scalar();
      if (!s) throw Error(ErrorKind::SingularSystem, "antipode coefficient is not a Laurent polynomial");
      value.add_term(basis[j], *s);
    }
    out.values.emplace(static_cast<GenId>(xi), normal_form(value));
  }
  antipode_ = std::move(out);
  return *antipode_;
}

namespace {

void require_crossed_module(const BraidedHopf& b, const ActionFn& act) {
  for (const auto& r : crossed_module_residuals(b, act)) {
    if (!r.residual.is_zero()) {
      throw Error(ErrorKind::CrossedModuleViolation, "crossed-module condition fails at (" +
                                                         b.alphabet().generator(r.b) + ", " +
                                                         b.over().alphabet().generator(r.h) + ")");
    }
  }
}

}  // namespace

SmashHopf bosonise(std::shared_ptr<const BraidedHopf> b) {
  ActionFn act = induced_action_fn(b);
  require_crossed_module(*b, act);
  return SmashHopf(std::move(b), std::move(act));
}

SmashHopf biproduct(std::shared_ptr<const BraidedHopf> b, ActionFn act) {
  require_crossed_module(*b, act);
  return SmashHopf(std::move(b), std::move(act));
}

BraidedSmash::BraidedSmash(std::shared_ptr<const BraidedHopf> b) : b_(std::move(b)) {}

Signature BraidedSmash::signature() const { return {&hopf().alphabet(), &b_->alphabet()}; }

Signature BraidedSmash::coproduct_signature() const {
  return {&hopf().alphabet(), &b_->alphabet(), &hopf().alphabet(), &b_->alphabet()};
}

NcElement BraidedSmash::from_hopf(const NcElement& h) const {
  const std::size_t at[] = {0};
  return embed(h, signature(), at);
}

NcElement BraidedSmash::from_braided(const NcElement& b) const {
  const std::size_t at[] = {1};
  return embed(b, signature(), at);
}

NcElement BraidedSmash::normal_form(const NcElement& u) const {
  const Presentation* slots[] = {&hopf().algebra(), &b_->algebra()};
  return braidkit::normal_form(u, slots);
}

NcElement BraidedSmash::product(const NcElement& u, const NcElement& v) const {
  if (u.signature() != signature() || v.signature() != signature()) {
    throw Error(ErrorKind::SignatureMismatch, "braided smash product: operands are not in H(x)B");
  }
  const DqtHopf& h = hopf();
  const Signature hs = h.signature();
  NcElement out(signature());
  for (const auto& [uw, uc] : u.terms()) {
    const NcElement cb = b_->coact(word_element(b_->signature(), uw[1]));
    for (const auto& [vw, vc] : v.terms()) {
      const NcElement ad = adjoint_coaction(h, word_element(hs, vw[0]));
      for (const auto& [a, ac] : ad.terms()) {
        for (const auto& [t, tc] : cb.terms()) {
          const Scalar r = h.eval_R(t[1], a[1]);
          if (r.is_zero()) continue;
          const NcElement left = transmuted_product(h, word_element(hs, uw[0]), word_element(hs, a[0]));
          for (const auto& [l, lc] : left.terms()) out.add_term(TensorWord{l[0], t[0] + vw[1]}, uc * vc * ac * tc * r * lc);
        }
      }
    }
  }
  return normal_form(out);
}

NcElement BraidedSmash::coproduct(const NcElement& u) const {
  const DqtHopf& h = hopf();
  const Signature hs = h.signature();
  const Signature sig = coproduct_signature();
  NcElement out(sig);
  for (const auto& [w, c] : u.terms()) {
    const NcElement dh = h.coproduct(word_element(hs, w[0]));
    const NcElement db = b_->coproduct_word(w[1]);
    for (const auto& [bt, bc] : db.terms()) {
      const NcElement co = b_->coact(word_element(b_->signature(), bt[0]));
      for (const auto& [ct, cc] : co.terms()) {
        const NcElement inner = b_->coact(word_element(b_->signature(), ct[0]));
        for (const auto& [ht, hc] : dh.terms()) {
          // Ψ(h2 (x) b1^(1)) = sum b1^(1)(1) (x) h2^(1) R(h2^(2) (x) b1^(1)(2))
          const NcElement ad = adjoint_coaction(h, word_element(hs, ht[1]));
          for (const auto& [a, ac] : ad.terms()) {
            for (const auto& [it, ic] : inner.terms()) {
              const Scalar r = h.eval_R(a[1], it[1]);
              if (r.is_zero()) continue;
              const NcElement mid = transmuted_product(h, word_element(hs, a[0]), word_element(hs, ct[1]));
              for (const auto& [m, mc] : mid.terms()) {
                out.add_term(TensorWord{ht[0], it[0], m[0], bt[1]}, c * bc * cc * hc * ac * ic * r * mc);
              }
            }
          }
        }
      }
    }
  }
  const Presentation* slots[] = {&h.algebra(), &b_->algebra(), &h.algebra(), &b_->algebra()};
  return braidkit::normal_form(out, slots);
}

Scalar BraidedSmash::counit(const NcElement& u) const {
  Scalar s;
  for (const auto& [w, c] : u.terms()) s += c * hopf().counit_word(w[0]) * b_->counit_word(w[1]);
  return s;
}

}  // namespace braidkit
