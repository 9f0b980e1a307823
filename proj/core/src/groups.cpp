#include "su2knots/groups.hpp"

#include <numeric>
#include <sstream>

#include "su2knots/errors.hpp"
#include "su2knots/smith.hpp"

namespace su2knots {

namespace {

void indexed_names(const char* stem, int n, std::vector<std::string>& out) {
  for (int i = 1; i <= n; ++i) {
    out.push_back(stem + std::to_string(i));
  }
}

}  // namespace

Presentation orbifold_group(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  if (n < 3) throw InputError("orbifold_group: need at least 3 cone points");
  Presentation out;
  indexed_names("a", n, out.generators);
  Word product;
  for (int i = 0; i < n; ++i) {
    if (p[i] < 2) throw InputError("orbifold_group: cone order must be >= 2");
    out.relators.push_back(Word::generator(i, p[i]));
    product.append(i, 1);
  }
  out.relators.push_back(product);
  return out;
}

std::vector<Word> covering_involution_images(int n) {
  if (n < 3) throw InputError("covering_involution_images: need n >= 3");
  std::vector<Word> images;
  images.push_back(Word::generator(0, -1));
  Word prefix = Word::generator(0, 1);  // a_1 ... a_{i-1}
  for (int i = 1; i < n - 1; ++i) {
    Word im = prefix;
    im.append(i, -1);
    im.append(prefix.inverse());
    images.push_back(im);
    prefix.append(i, 1);
  }
  images.push_back(Word::generator(n - 1, -1));
  return images;
}

GroupMap covering_involution(const std::vector<int>& p) {
  const Presentation delta = orbifold_group(p);
  return GroupMap{delta, delta, covering_involution_images(static_cast<int>(p.size()))};
}

GroupMap triangle_quotient(const std::vector<int>& p) {
  if (p.size() < 3) throw InputError("triangle_quotient: need n >= 3");
  GroupMap m;
  m.domain = orbifold_group(p);
  m.codomain = orbifold_group({p[0], p[1], p[2]});
  for (std::size_t i = 0; i < p.size(); ++i) {
    m.images.push_back(i < 3 ? Word::generator(static_cast<int>(i)) : Word());
  }
  return m;
}

Presentation pi_orbifold_extension(int p1, int p2, int p3) {
  const std::vector<int> p{p1, p2, p3};
  Presentation out = orbifold_group(p);
  out.generators.push_back("t");
  const int t = 3;
  out.relators.push_back(Word::generator(t, 2));
  const std::vector<Word> inv = covering_involution_images(3);
  // Conjugation relators for a1 and a2 suffice: the one for a3 = (a1 a2)^-1
  // follows from them together with the product relator.
  for (int i = 0; i < 2; ++i) {
    Word rel = Word::generator(t, 1);
    rel.append(i, 1);
    rel.append(t, -1);
    rel.append(inv[i].inverse());
    out.relators.push_back(rel);
  }
  return out;
}

Presentation seifert_group(const std::vector<Tangle>& tangles) {
  const int n = static_cast<int>(tangles.size());
  Presentation out;
  indexed_names("x", n, out.generators);
  out.generators.push_back("h");
  const int h = n;
  for (int i = 0; i < n; ++i) {
    Word comm;  // [x_i, h]
    comm.append(i, 1);
    comm.append(h, 1);
    comm.append(i, -1);
    comm.append(h, -1);
    out.relators.push_back(comm);
  }
  for (int i = 0; i < n; ++i) {
    Word rel = Word::generator(i, tangles[i].p);
    rel.append(h, tangles[i].q);
    out.relators.push_back(rel);
  }
  Word product;
  for (int i = 0; i < n; ++i) product.append(i, 1);
  out.relators.push_back(product);
  return out;
}

Presentation seifert_group(const MontesinosKnot& k) { return seifert_group(k.tangles()); }

MontesinosKnot montesinos_validate(const std::vector<Tangle>& tangles) {
  if (tangles.empty()) throw InputError("bad tangle: empty tangle list");
  int even_count = 0;
  for (const Tangle& t : tangles) {
    if (t.p < 2) {
      throw InputError("bad tangle: denominator " + std::to_string(t.p) + " < 2");
    }
    if (t.q == 0 || std::gcd(std::abs(t.q), t.p) != 1) {
      throw InputError("bad tangle: " + std::to_string(t.q) + "/" +
                       std::to_string(t.p) + " is not reduced");
    }
    if (t.p % 2 == 0) ++even_count;
  }
  if (even_count > 1) {
    throw InputError("link not knot: more than one even tangle denominator");
  }
  const std::uint64_t det = h1_order(seifert_group(tangles));
  if (det == 0 || det % 2 == 0) {
    throw InputError("link not knot: |H1(Sigma2)| = " + std::to_string(det) +
                     " is not odd");
  }
  return MontesinosKnot(tangles, det);
}

Presentation two_bridge_group(int p, int q) {
  if (p < 3 || p % 2 == 0) {
    throw InputError("two_bridge_group: p must be odd and >= 3");
  }
  if (q <= 0 || q >= p || std::gcd(p, q) != 1) {
    throw InputError("two_bridge_group: need 0 < q < p with gcd(p, q) = 1");
  }
  Presentation out;
  out.generators = {"a", "b"};
  Word w;
  for (int i = 1; i <= p - 1; ++i) {
    const int gen = (i % 2 == 1) ? 0 : 1;  // a, b alternating, a first
    const int eps = ((static_cast<long long>(i) * q / p) % 2 == 0) ? 1 : -1;
    w.append(gen, eps);
  }
  Word rel = w;
  rel.append(0, 1);
  rel.append(w.inverse());
  rel.append(1, -1);
  out.relators.push_back(rel);
  return out;
}

std::uint64_t h1_order(const Presentation& p) {
  const std::size_t g = p.generators.size();
  IntMatrix m(p.relators.size(), g);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      m.at(i, j) = p.relators[i].exponent_sum(static_cast<int>(j));
    }
  }
  const std::vector<BigInt> diag = smith_diagonal(m);
  if (diag.size() < g) return 0;  // fewer relators than generators: infinite
  BigInt order = 1;
  for (const BigInt& d : diag) {
    if (d == 0) return 0;
    order *= d;
  }
  if (order > BigInt(UINT64_MAX)) {
    throw NumericalError("h1_order: torsion order exceeds 64 bits");
  }
  return order.convert_to<std::uint64_t>();
}

}  // namespace su2knots
