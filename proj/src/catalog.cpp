#include "braidkit/catalog.hpp"

#include <mutex>

#include "braidkit/constructions.hpp"
#include "braidkit/error.hpp"

namespace braidkit::catalog {

namespace {

struct Entry {
  const char* name;
  const char* text;
};

// Relations are transcribed as printed; tables marked "derived" are
// regenerated by the oracles below and compared in the test suite.
const Entry kEntries[] = {
    {"glq2", R"([algebra glq2]

[generators]
alpha beta gamma delta C Cinv

[relations]
alpha*beta = q^-1*beta*alpha
alpha*gamma = q^-1*gamma*alpha
beta*delta = q^-1*delta*beta
gamma*delta = q^-1*delta*gamma
beta*gamma = gamma*beta
alpha*delta - delta*alpha = (q^-1 - q)*beta*gamma
C = alpha*delta - q^-1*beta*gamma   # quantum determinant
C*Cinv = 1
Cinv*C = 1

[coproduct]
alpha = alpha (x) alpha + beta (x) gamma   # matrix coproduct
beta = alpha (x) beta + beta (x) delta
gamma = gamma (x) alpha + delta (x) gamma
delta = gamma (x) beta + delta (x) delta
C = C (x) C
Cinv = Cinv (x) Cinv

[counit]
alpha = 1
beta = 0
gamma = 0
delta = 1
C = 1
Cinv = 1

[antipode]
alpha = Cinv*delta   # derived: inverse matrix
beta = -q*Cinv*beta
gamma = -q^-1*Cinv*gamma
delta = Cinv*alpha
C = Cinv
Cinv = C

[R]
alpha, alpha = q^2   # derived: solved from the quantum plane braiding
alpha, beta = 0
alpha, gamma = 0
alpha, delta = q
beta, alpha = 0
beta, beta = 0
beta, gamma = q^2 - 1
beta, delta = 0
gamma, alpha = 0
gamma, beta = 0
gamma, gamma = 0
gamma, delta = 0
delta, alpha = q
delta, beta = 0
delta, gamma = 0
delta, delta = q^2
)"},
    {"bglq2", R"([algebra bglq2]

[generators]
a b c d D Dinv

[relations]
b*a = q^2*a*b
c*a = q^-2*a*c
d*a = a*d
b*c = c*b + (1 - q^-2)*a*(d - a)
d*b = b*d + (1 - q^-2)*a*b
c*d = d*c + (1 - q^-2)*c*a
D = a*d - q^2*c*b   # braided determinant
D*Dinv = 1
Dinv*D = 1

[coproduct]
a = a (x) a + b (x) c   # matrix coproduct
b = a (x) b + b (x) d
c = c (x) a + d (x) c
d = c (x) b + d (x) d
D = D (x) D
Dinv = Dinv (x) Dinv

[counit]
a = 1
b = 0
c = 0
d = 1
D = 1
Dinv = 1

[antipode]
a = (1 - q^2)*a*Dinv + q^2*d*Dinv   # derived: solved from the antipode axiom
b = -q^2*b*Dinv
c = -q^2*c*Dinv
d = a*Dinv
D = Dinv
Dinv = D

[coaction over=glq2]
a = (1 - q^2)*a (x) 1 + q^2*a (x) alpha*delta*Cinv + q*b (x) gamma*delta*Cinv - q^2*c (x) alpha*beta*Cinv + q^2*d (x) 1 - q^2*d (x) alpha*delta*Cinv   # derived: adjoint coaction
b = q*a (x) beta*delta*Cinv + b (x) delta*delta*Cinv - q*c (x) beta*beta*Cinv - q*d (x) beta*delta*Cinv
c = -a (x) alpha*gamma*Cinv - q^-1*b (x) gamma*gamma*Cinv + c (x) alpha*alpha*Cinv + d (x) alpha*gamma*Cinv
d = a (x) 1 - a (x) alpha*delta*Cinv - q^-1*b (x) gamma*delta*Cinv + c (x) alpha*beta*Cinv + d (x) alpha*delta*Cinv
D = D (x) 1
Dinv = Dinv (x) 1

[identify over=glq2]
a = alpha   # transmutation carries glq2 onto bglq2
b = beta
c = gamma
d = delta
D = C
Dinv = Cinv
)"},
    {"aq2", R"([algebra aq2]

[generators]
x y

[relations]
y*x = q*x*y

[coaction over=glq2]
x = x (x) alpha + y (x) gamma   # row vector times the generator matrix
y = x (x) beta + y (x) delta

[coproduct]
x = x (x) 1 + 1 (x) x   # linear coaddition
y = y (x) 1 + 1 (x) y

[counit]
x = 0
y = 0

[antipode]
x = -x
y = -y
)"},
    {"z2prime", R"([algebra z2prime]

[generators]
g

[relations]
g*g = 1

[coproduct]
g = g (x) g

[counit]
g = 1

[antipode]
g = g

[R]
g, g = -1   # derived: the odd generator braids with a sign
)"},
    {"superline", R"([algebra superline]

[generators]
v   # odd

[coaction over=z2prime]
v = v (x) g

[coproduct]
v = v (x) 1 + 1 (x) v

[counit]
v = 0

[antipode]
v = -v
)"},
    {"zgrade", R"([algebra zgrade]

[generators]
K Kinv

[relations]
K*Kinv = 1
Kinv*K = 1

[coproduct]
K = K (x) K
Kinv = Kinv (x) Kinv

[counit]
K = 1
Kinv = 1

[antipode]
K = Kinv
Kinv = K

[R]
K, K = q   # derived convention: degree-one braiding by q
)"},
    {"braidedline", R"([algebra braidedline]

[generators]
x

[coaction over=zgrade]
x = x (x) K   # degree one

[coproduct]
x = x (x) 1 + 1 (x) x

[counit]
x = 0

[antipode]
x = -x
)"},
};

const Entry& find_entry(std::string_view name) {
  for (const auto& e : kEntries) {
    if (name == e.name) return e;
  }
  throw Error(ErrorKind::UnknownEntry, "no catalog entry named '" + std::string(name) + "'");
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, BundlePtr, std::less<>>& cache() {
  static std::map<std::string, BundlePtr, std::less<>> c;
  return c;
}

GenId gen(const Alphabet& a, std::string_view name) {
  auto id = a.find(name);
  if (!id) throw Error(ErrorKind::UnknownGenerator, std::string(name) + " is not a generator of " + a.name());
  return *id;
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> out = [] {
    std::vector<std::string> v;
    for (const auto& e : kEntries) v.emplace_back(e.name);
    return v;
  }();
  return out;
}

std::string_view source(std::string_view name) { return find_entry(name).text; }

BundlePtr load(std::string_view name) {
  const Entry& entry = find_entry(name);
  {
    const std::lock_guard lock(cache_mutex());
    if (auto it = cache().find(name); it != cache().end()) return it->second;
  }
  // Dependencies load outside the lock; a duplicate build is harmless.
  auto built = load_definitions(entry.text, [](const std::string& over) { return load(over); });
  const std::lock_guard lock(cache_mutex());
  return cache().emplace(std::string(name), built.front()).first->second;
}

BundlePtr resolve(const std::string& name) {
  for (const auto& e : kEntries) {
    if (name == e.name) return load(name);
  }
  return nullptr;
}

std::map<std::pair<GenId, GenId>, NcElement> plane_braiding() {
  const ComoduleAlgebra& plane = *load("aq2")->comodule;
  const Signature sig = plane.signature(2);
  const Alphabet& a = plane.alphabet();
  const GenId x = gen(a, "x");
  const GenId y = gen(a, "y");
  const Scalar q = Scalar::q(1);
  std::map<std::pair<GenId, GenId>, NcElement> out;
  out[{x, x}] = NcElement::term(sig, {Word(1, x), Word(1, x)}, q * q);
  out[{x, y}] = NcElement::term(sig, {Word(1, y), Word(1, x)}, q);
  out[{y, y}] = NcElement::term(sig, {Word(1, y), Word(1, y)}, q * q);
  out[{y, x}] = NcElement::term(sig, {Word(1, x), Word(1, y)}, q) +
                NcElement::term(sig, {Word(1, y), Word(1, x)}, q * q - Scalar(1));
  return out;
}

RTableSolution regenerate_glq2_r_table() {
  const ComoduleAlgebra& plane = *load("aq2")->comodule;
  return solve_r_table(plane.algebra(), plane.over().alphabet(), plane.coaction_table(), plane_braiding());
}

std::map<GenId, NcElement> regenerate_bglq2_coaction() {
  const BundlePtr bgl = load("bglq2");
  const DqtHopf& h = *bgl->over->dqt;
  const Alphabet& b = bgl->algebra->alphabet();
  // Letters of glq2 back to letters of bglq2.
  std::map<GenId, GenId> back;
  for (const auto& [letter, image] : bgl->identification) {
    if (image.size() != 1 || image.terms().begin()->first[0].size() != 1 ||
        image.terms().begin()->second != Scalar(1)) {
      throw Error(ErrorKind::SignatureMismatch, "identification is not letter-to-letter");
    }
    back[image.terms().begin()->first[0][0]] = letter;
  }
  const Signature image{&b};
  std::map<GenId, NcElement> out;
  for (const auto& [letter, hv] : bgl->identification) {
    const NcElement ad = adjoint_coaction(h, hv);
    out.emplace(letter, map_slots(ad, 0, 1, image, [&](std::span<const Word> w) {
                  Word mapped;
                  for (GenId g : w[0]) mapped.push_back(back.at(g));
                  return NcElement::term(image, {mapped});
                }));
  }
  const Presentation* slots[] = {bgl->algebra.get(), &h.algebra()};
  for (auto& [g, v] : out) v = normal_form(v, slots);
  return out;
}

AntipodeTableSolution regenerate_bglq2_antipode() {
  const BundlePtr bgl = load("bglq2");
  const BraidedHopf& b = *bgl->braided;
  const Alphabet& a = b.alphabet();
  const Signature one = b.signature();
  std::map<GenId, NcElement> fixed;
  fixed.emplace(gen(a, "D"), NcElement::term(one, {Word(1, gen(a, "Dinv"))}));
  fixed.emplace(gen(a, "Dinv"), NcElement::term(one, {Word(1, gen(a, "D"))}));
  return solve_antipode_table(b.algebra(), b.tables().coproduct, b.tables().counit, fixed, 2);
}

}  // namespace braidkit::catalog
