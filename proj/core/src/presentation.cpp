#include "su2knots/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "su2knots/errors.hpp"

namespace su2knots {

Word::Word(std::initializer_list<Letter> letters) {
  for (const Letter& l : letters) append(l.gen, l.exp);
}

Word::Word(const std::vector<Letter>& letters) {
  for (const Letter& l : letters) append(l.gen, l.exp);
}

void Word::append(int gen, int exp) {
  if (gen < 0) throw InputError("Word: negative generator index");
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({gen, exp});
}

void Word::append(const Word& w) {
  for (const Letter& l : w.letters_) append(l.gen, l.exp);
}

Word Word::inverse() const {
  Word out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.append(it->gen, -it->exp);
  }
  return out;
}

Word Word::operator*(const Word& rhs) const {
  Word out = *this;
  out.append(rhs);
  return out;
}

int Word::max_gen() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

int Word::exponent_sum(int gen) const {
  int s = 0;
  for (const Letter& l : letters_) {
    if (l.gen == gen) s += l.exp;
  }
  return s;
}

int Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return static_cast<int>(i);
  }
  return -1;
}

void Presentation::check() const {
  for (const Word& r : relators) {
    if (r.max_gen() >= static_cast<int>(generators.size())) {
      throw InputError("Presentation: relator uses an undeclared generator");
    }
  }
}

Word GroupMap::apply(const Word& w) const {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen >= static_cast<int>(images.size())) {
      throw InputError("GroupMap: word uses a generator with no image");
    }
    const Word& im = images[l.gen];
    const Word piece = l.exp >= 0 ? im : im.inverse();
    const int reps = l.exp >= 0 ? l.exp : -l.exp;
    for (int i = 0; i < reps; ++i) out.append(piece);
  }
  return out;
}

SU2 evaluate_word(std::span<const SU2> images, const Word& w) {
  SU2 acc = SU2::identity();
  for (const Letter& l : w.letters()) {
    if (l.gen >= static_cast<int>(images.size())) {
      throw InputError("evaluate_word: generator has no assigned image");
    }
    acc = acc * images[l.gen].pow(l.exp);
  }
  return acc;
}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError(std::string("parse error: bad ") + what + " '" +
                     std::string(s) + "'");
  }
  return value;
}

Word parse_relator(std::string_view body, const Presentation& p) {
  Word w;
  for (const std::string& tok : split_ws(body)) {
    std::string_view name(tok);
    int exp = 1;
    if (const auto caret = tok.find('^'); caret != std::string::npos) {
      name = std::string_view(tok).substr(0, caret);
      exp = parse_int(std::string_view(tok).substr(caret + 1), "exponent");
    }
    const int gen = p.generator_index(name);
    if (gen < 0) {
      throw InputError("parse error: unknown generator '" + std::string(name) + "'");
    }
    w.append(gen, exp);
  }
  return w;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
      line.remove_prefix(1);
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.remove_suffix(1);
    }
    if (line.empty()) continue;

    if (line.starts_with("gens:")) {
      if (have_gens) throw InputError("parse error: duplicate 'gens:' line");
      for (const std::string& name : split_ws(line.substr(5))) {
        if (p.generator_index(name) >= 0) {
          throw InputError("parse error: repeated generator '" + name + "'");
        }
        p.generators.push_back(name);
      }
      if (p.generators.empty()) throw InputError("parse error: empty 'gens:' line");
      have_gens = true;
    } else if (line.starts_with("rel:")) {
      if (!have_gens) throw InputError("parse error: 'rel:' before 'gens:'");
      p.relators.push_back(parse_relator(line.substr(4), p));
    } else {
      throw InputError("parse error: unrecognized line '" + std::string(line) + "'");
    }
  }
  if (!have_gens) throw InputError("parse error: missing 'gens:' line");
  p.check();
  return p;
}

std::string word_to_text(const Word& w, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << names.at(static_cast<std::size_t>(l.gen));
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

std::string presentation_to_text(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const std::string& g : p.generators) os << ' ' << g;
  os << '\n';
  for (const Word& r : p.relators) {
    os << "rel: " << word_to_text(r, p.generators) << '\n';
  }
  return os.str();
}

std::string presentation_to_line(const Presentation& p) {
  std::string multi = presentation_to_text(p);
  std::string out;
  for (char c : multi) {
    if (c == '\n') {
      out += "; ";
    } else {
      out += c;
    }
  }
  while (out.ends_with("; ")) out.erase(out.size() - 2);
  return out;
}

}  // namespace su2knots
