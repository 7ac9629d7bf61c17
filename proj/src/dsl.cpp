#include "arthurlab/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "arthurlab/errors.hpp"

namespace arthurlab {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  void ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool peek(char c) {
    ws();
    return pos < text.size() && text[pos] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(pos, std::string("'") + c + "'");
  }
  void expect_word(const std::string& w) {
    ws();
    if (text.compare(pos, w.size(), w) != 0) throw ParseError(pos, "'" + w + "'");
    pos += w.size();
  }
  void end() {
    ws();
    if (pos != text.size()) throw ParseError(pos, "end of input");
  }

  bool at_digit() {
    ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }

  int uint_token(const char* what) {
    ws();
    size_t start = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000'000) throw ParseError(start, "smaller number");
      ++pos;
    }
    if (pos == start) throw ParseError(start, what);
    return static_cast<int>(value);
  }

  int positive(const char* what) {
    size_t start = pos;
    int v = uint_token(what);
    if (v < 1) throw ParseError(start, what);
    return v;
  }

  std::string ident() {
    ws();
    size_t start = pos;
    auto head = [](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    auto body = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    if (pos >= text.size() || !head(text[pos])) throw ParseError(pos, "name");
    ++pos;
    while (pos < text.size() && body(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }

  HalfInt half() {
    ws();
    bool neg = eat('-');
    int num = uint_token("number");
    if (eat('/')) {
      size_t at = pos;
      if (uint_token("denominator 2") != 2)
        throw ParseError(at, "denominator 2");
      return HalfInt::halves(neg ? -num : num);
    }
    return HalfInt::whole(neg ? -num : num);
  }

  SupercuspidalLabel label() {
    std::string name = ident();
    expect('(');
    int dim = positive("positive GL dimension");
    expect(',');
    ws();
    if (pos >= text.size() || (text[pos] != 'O' && text[pos] != 'S'))
      throw ParseError(pos, "self-dual type O or S");
    SelfdualType type =
        text[pos] == 'O' ? SelfdualType::Orthogonal : SelfdualType::Symplectic;
    ++pos;
    expect(')');
    return SupercuspidalLabel{std::move(name), dim, type, ""};
  }

  GroupSpec group() {
    ws();
    size_t start = pos;
    std::string fam = ident();
    expect(':');
    size_t at = pos;
    int size = uint_token("matrix size");
    if (fam == "Sp") {
      if (size % 2 != 0) throw ParseError(at, "even matrix size for Sp");
      return GroupSpec{GroupFamily::Sp, size / 2};
    }
    if (fam == "SO") {
      if (size % 2 != 1) throw ParseError(at, "odd matrix size for SO");
      return GroupSpec{GroupFamily::SOOdd, (size - 1) / 2};
    }
    throw ParseError(start, "family Sp or SO");
  }

  // Leading [k *] multiplicity shared by both summand grammars.
  int multiplicity() {
    if (!at_digit()) return 1;
    size_t start = pos;
    int k = uint_token("multiplicity");
    if (k < 1) throw ParseError(start, "positive multiplicity");
    expect('*');
    return k;
  }

  int s_size() {
    expect('.');
    expect('S');
    return positive("positive S size");
  }
};

std::string term_str(const ArthurSummand& s) {
  return print_label(s.rho) + ".S" + std::to_string(s.a) + ".S" +
         std::to_string(s.b);
}

std::string term_str(const LSummand& s) {
  return print_label(s.rho) + "[" + s.x.str() + "].S" + std::to_string(s.a);
}

template <typename Summand>
std::string print_sum(const GroupSpec& group, std::vector<Summand> summands) {
  std::sort(summands.begin(), summands.end());
  std::string out = group.str() + " =";
  if (summands.empty()) return out + " 0";
  for (size_t i = 0; i < summands.size();) {
    size_t j = i;
    while (j < summands.size() && summands[j] == summands[i]) ++j;
    out += i == 0 ? " " : " + ";
    if (j - i > 1) out += std::to_string(j - i) + "*";
    out += term_str(summands[i]);
    i = j;
  }
  return out;
}

}  // namespace

std::string print_half(HalfInt h) { return h.str(); }

HalfInt parse_half(const std::string& text) {
  Cursor c{text};
  HalfInt h = c.half();
  c.end();
  return h;
}

std::string print_label(const SupercuspidalLabel& rho) {
  std::string out = rho.name + "(" + std::to_string(rho.dim) + "," +
                    selfdual_type_char(rho.type);
  if (!rho.self_dual()) out += ";" + rho.dual_name;
  return out + ")";
}

SupercuspidalLabel parse_label(const std::string& text) {
  Cursor c{text};
  SupercuspidalLabel rho = c.label();
  c.end();
  return rho;
}

std::string print_parameter(const LocalArthurParameter& psi) {
  return print_sum(psi.group, psi.summands);
}

LocalArthurParameter parse_parameter(const std::string& text) {
  Cursor c{text};
  GroupSpec group = c.group();
  c.expect('=');
  std::vector<ArthurSummand> summands;
  if (!c.eat('0')) {
    do {
      int k = c.multiplicity();
      SupercuspidalLabel rho = c.label();
      int a = c.s_size();
      int b = c.s_size();
      for (int i = 0; i < k; ++i) summands.push_back(ArthurSummand{rho, a, b});
    } while (c.eat('+'));
  }
  c.end();
  return make_parameter(group, std::move(summands));
}

std::string print_l_parameter(const LocalLParameter& phi) {
  return print_sum(phi.group, phi.summands);
}

LocalLParameter parse_l_parameter(const std::string& text) {
  Cursor c{text};
  GroupSpec group = c.group();
  c.expect('=');
  std::vector<LSummand> summands;
  if (!c.eat('0')) {
    do {
      int k = c.multiplicity();
      SupercuspidalLabel rho = c.label();
      c.expect('[');
      HalfInt x = c.half();
      c.expect(']');
      int a = c.s_size();
      for (int i = 0; i < k; ++i) summands.push_back(LSummand{rho, x, a});
    } while (c.eat('+'));
  }
  c.end();
  return make_l_parameter(group, std::move(summands));
}

}  // namespace arthurlab
