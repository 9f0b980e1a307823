#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "su2knots/su2.hpp"

namespace su2knots {

struct Letter {
  int gen;  // generator index, >= 0
  int exp;  // nonzero exponent
  bool operator==(const Letter&) const = default;
};

// Word in a free group on indexed generators.  Adjacent letters with the
// same generator merge on construction; zero exponents drop out.  No
// further free reduction is performed.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(const std::vector<Letter>& letters);

  void append(int gen, int exp);
  void append(const Word& w);

  Word inverse() const;
  Word operator*(const Word& rhs) const;

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  // Largest generator index appearing, or -1 for the empty word.
  int max_gen() const;
  int exponent_sum(int gen) const;

  bool operator==(const Word&) const = default;

  static Word generator(int gen, int exp = 1) {
    Word w;
    w.append(gen, exp);
    return w;
  }

private:
  std::vector<Letter> letters_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t rank() const { return generators.size(); }
  // Index of a named generator, or -1.
  int generator_index(std::string_view name) const;
  // Throws InputError if a relator mentions an out-of-range generator.
  void check() const;
};

// Homomorphism given on generators; relator preservation is a caller
// obligation, checked numerically in the test suites.
struct GroupMap {
  Presentation domain;
  Presentation codomain;
  std::vector<Word> images;  // one codomain word per domain generator

  Word apply(const Word& w) const;
};

// Ordered product of generator images; the empty word maps to identity.
SU2 evaluate_word(std::span<const SU2> images, const Word& w);
inline SU2 evaluate_word(const std::vector<SU2>& images, const Word& w) {
  return evaluate_word(std::span<const SU2>(images), w);
}

// Text format:
//   # comment
//   gens: a b t
//   rel: a^3 b^-1 t
// Letters are whitespace-separated generator names with an optional
// integer exponent after '^'.
Presentation parse_presentation(std::string_view text);
std::string presentation_to_text(const Presentation& p);
// Single-line form with "; " separators, used when a presentation is
// echoed inside a certificate field.
std::string presentation_to_line(const Presentation& p);

std::string word_to_text(const Word& w, const std::vector<std::string>& names);

}  // namespace su2knots
