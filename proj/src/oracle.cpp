#include "braidkit/oracle.hpp"

#include <set>

#include "braidkit/error.hpp"
#include "braidkit/linsolve.hpp"

namespace braidkit {

namespace {

Scalar laurent(const RatFunc& r, const std::string& what) {
  auto s = r.to_scalar();
  if (!s) throw Error(ErrorKind::SingularSystem, what + " is not a Laurent polynomial: " + r.to_string());
  return *s;
}

/// Coefficient rows keyed by output tensor word.
struct Rows {
  struct Row {
    std::map<std::size_t, Scalar> coeffs;
    Scalar rhs;
  };
  std::map<TensorWord, Row, TensorWordLess> rows;

  void flush(LinearSystem& system) {
    for (auto& [w, row] : rows) {
      std::map<std::size_t, Scalar> coeffs;
      for (auto& [k, v] : row.coeffs) {
        if (!v.is_zero()) coeffs.emplace(k, v);
      }
      if (coeffs.empty() && row.rhs.is_zero()) continue;
      system.add_equation(coeffs, row.rhs);
    }
    rows.clear();
  }
};

}  // namespace

RTableSolution solve_r_table(const Presentation& v, const Alphabet& h, const std::map<GenId, NcElement>& coaction,
                             const std::map<std::pair<GenId, GenId>, NcElement>& braiding) {
  std::set<GenId> letters;
  for (const auto& [g, c] : coaction) {
    for (const auto& [t, s] : c.terms()) {
      if (t[1].size() != 1) {
        throw Error(ErrorKind::SingularSystem,
                    "coaction of " + v.alphabet().generator(g) + " has an H-leg that is not a single generator");
      }
      letters.insert(t[1][0]);
    }
  }
  std::map<std::pair<GenId, GenId>, std::size_t> index;
  for (GenId s : letters) {
    for (GenId t : letters) index.emplace(std::pair{s, t}, index.size());
  }

  LinearSystem system(index.size());
  const Signature vv = v.signature(2);
  const Presentation* slots[] = {&v, &v};
  for (const auto& [pair, expected] : braiding) {
    Rows rows;
    for (const auto& [w, c] : normal_form(expected, slots).terms()) rows.rows[w].rhs += c;
    for (const auto& [tv, sv] : coaction.at(pair.first).terms()) {
      for (const auto& [tw, sw] : coaction.at(pair.second).terms()) {
        const std::size_t k = index.at({tv[1][0], tw[1][0]});
        const NcElement swapped = normal_form(NcElement::term(vv, {tw[0], tv[0]}, sv * sw), slots);
        for (const auto& [w, c] : swapped.terms()) rows.rows[w].coeffs[k] += c;
      }
    }
    rows.flush(system);
  }

  const auto sol = system.solve();
  if (!sol.consistent) throw Error(ErrorKind::SingularSystem, "R-table equations are inconsistent");
  RTableSolution out;
  out.unique = sol.unique;
  out.unknowns = system.unknowns();
  out.rank = sol.rank;
  for (const auto& [key, k] : index) {
    out.table.emplace(key, laurent(sol.values[k], "R(" + h.generator(key.first) + "," + h.generator(key.second) + ")"));
  }
  return out;
}

AntipodeTableSolution solve_antipode_table(const Presentation& b, const std::map<GenId, NcElement>& coproduct,
                                           const std::map<GenId, Scalar>& counit,
                                           const std::map<GenId, NcElement>& fixed, std::size_t max_length) {
  const Signature sig = b.signature();
  const std::vector<Word> basis = b.normal_words(max_length);
  const std::size_t nb = basis.size();
  std::vector<GenId> unknown_gens;
  std::map<GenId, std::size_t> offset;
  for (std::size_t g = 0; g < b.alphabet().size(); ++g) {
    const auto id = static_cast<GenId>(g);
    if (fixed.count(id)) continue;
    offset[id] = unknown_gens.size() * nb;
    unknown_gens.push_back(id);
  }

  LinearSystem system(unknown_gens.size() * nb);
  auto word = [&](const Word& w) { return NcElement::term(sig, {w}); };
  for (GenId x : unknown_gens) {
    const NcElement& delta = coproduct.at(x);
    for (int side = 0; side < 2; ++side) {
      Rows rows;
      rows.rows[TensorWord{Word()}].rhs = counit.at(x);
      for (const auto& [t, c] : delta.terms()) {
        // side 0: S(t0) t1, side 1: t0 S(t1)
        const Word& inner = side == 0 ? t[0] : t[1];
        const Word& outer = side == 0 ? t[1] : t[0];
        auto around = [&](const Word& s) { return side == 0 ? s + outer : outer + s; };
        if (inner.empty()) {
          for (const auto& [w, wc] : b.normal_form(word(outer)).terms()) rows.rows[w].rhs -= c * wc;
        } else if (inner.size() == 1 && fixed.count(inner[0])) {
          const NcElement known = fixed.at(inner[0]);
          NcElement e(sig);
          for (const auto& [kw, kc] : known.terms()) e.add_term(TensorWord{around(kw[0])}, kc);
          for (const auto& [w, wc] : b.normal_form(e).terms()) rows.rows[w].rhs -= c * wc;
        } else if (inner.size() == 1) {
          const std::size_t base = offset.at(inner[0]);
          for (std::size_t j = 0; j < nb; ++j) {
            for (const auto& [w, wc] : b.normal_form(word(around(basis[j]))).terms()) {
              rows.rows[w].coeffs[base + j] += c * wc;
            }
          }
        } else {
          throw Error(ErrorKind::SingularSystem, "coproduct leg of degree > 1 carries an unknown antipode");
        }
      }
      rows.flush(system);
    }
  }

  const auto sol = system.solve();
  if (!sol.consistent) throw Error(ErrorKind::SingularSystem, "antipode equations have no solution in the ansatz span");
  AntipodeTableSolution out;
  out.unique = sol.unique;
  out.unknowns = system.unknowns();
  out.rank = sol.rank;
  for (GenId x : unknown_gens) {
    NcElement value(sig);
    for (std::size_t j = 0; j < nb; ++j) {
      const Scalar s = laurent(sol.values[offset[x] + j], "S(" + b.alphabet().generator(x) + ")");
      if (!s.is_zero()) value.add_term(TensorWord{basis[j]}, s);
    }
    out.values.emplace(x, b.normal_form(value));
  }
  for (const auto& [g, v] : fixed) out.values.emplace(g, b.normal_form(v));
  return out;
}

}  // namespace braidkit
