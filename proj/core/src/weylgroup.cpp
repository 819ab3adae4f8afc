#include "weylkit/weylgroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "weylkit/error.hpp"

namespace weylkit {

namespace {

std::string toggle_inverse(const std::string& token) {
  constexpr std::string_view suffix = "^-1";
  if (token.size() > suffix.size() && token.ends_with(suffix))
    return token.substr(0, token.size() - suffix.size());
  // Reflections are involutions.
  if (token.starts_with("r:")) return token;
  if (token.size() >= 2 && token[0] == 's' &&
      std::all_of(token.begin() + 1, token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return token;
  return token + std::string(suffix);
}

Word inverse_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(toggle_inverse(*it));
  return out;
}

std::string image_text(const Permutation& image) {
  std::string s = "aut:[";
  for (std::size_t i = 0; i < image.size(); ++i) s += (i ? "," : "") + std::to_string(image[i]);
  return s + "]";
}

}  // namespace

std::string GeneratorToken::text() const {
  switch (kind) {
    case Kind::Reflection: return "s" + std::to_string(index);
    case Kind::Automorphism: return (name.empty() ? image_text(image) : name) + (inverted ? "^-1" : "");
    case Kind::RootReflection: return "r:" + (name.empty() ? format_root(root) : name);
  }
  return {};
}

GroupElement::GroupElement(IntMatrix matrix, IntMatrix inverse, std::optional<Word> word)
    : matrix_(std::move(matrix)), inverse_(std::move(inverse)), word_(std::move(word)) {}

GroupElement GroupElement::identity(int size) {
  return GroupElement(IntMatrix::identity(size), IntMatrix::identity(size), Word{});
}

GroupElement GroupElement::from_matrix(IntMatrix matrix, std::optional<Word> word) {
  if (!matrix.square()) throw Error(ErrorKind::DimensionMismatch, "element matrix must be square");
  IntMatrix inv = unimodular_inverse(matrix);
  return GroupElement(std::move(matrix), std::move(inv), std::move(word));
}

std::string GroupElement::word_text() const {
  if (!word_) return "";
  if (word_->empty()) return "1";
  std::string s;
  for (const auto& t : *word_) s += (s.empty() ? "" : " ") + t;
  return s;
}

GroupElement GroupElement::with_word(Word word) const {
  return GroupElement(matrix_, inverse_, std::move(word));
}

GroupElement GroupElement::inverse() const {
  std::optional<Word> w;
  if (word_) w = inverse_word(*word_);
  return GroupElement(inverse_, matrix_, std::move(w));
}

GroupElement GroupElement::pow(long long exponent) const {
  GroupElement base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent) : exponent;
  std::optional<Word> word;
  if (base.word_ && e <= 64) {
    word = Word{};
    for (unsigned long long k = 0; k < e; ++k)
      word->insert(word->end(), base.word_->begin(), base.word_->end());
  }
  GroupElement result = identity(size());
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  result.word_ = std::move(word);
  return result;
}

bool GroupElement::commutes_with(const GroupElement& other) const {
  return matrix_ * other.matrix_ == other.matrix_ * matrix_;
}

RootVec GroupElement::operator()(const RootVec& v) const {
  if (v.size() != matrix_.cols())
    throw Error(ErrorKind::DimensionMismatch, "root vector size does not match the element");
  return RootVec(matrix_ * v.coords());
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "elements of different ambients");
  std::optional<Word> w;
  if (a.word_ && b.word_) {
    w = *a.word_;
    w->insert(w->end(), b.word_->begin(), b.word_->end());
  }
  return GroupElement(a.matrix_ * b.matrix_, b.inverse_ * a.inverse_, std::move(w));
}

GroupElement simple_reflection(int i, const CartanData& data) {
  const int n = data.size();
  if (i < 0 || i >= n) throw Error(ErrorKind::InvalidArgument, "node index out of range");
  IntMatrix m = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j) m(i, j) -= data(j, i);
  return GroupElement(m, m, Word{"s" + std::to_string(i)});
}

GroupElement diagram_automorphism(const Permutation& image, const CartanData& data,
                                  std::string name) {
  const int n = data.size();
  if (image.size() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::DimensionMismatch, "automorphism length differs from the diagram size");
  std::vector<bool> hit(n, false);
  for (int x : image) {
    if (x < 0 || x >= n || hit[x]) throw Error(ErrorKind::NotDiagramSymmetry, "not a permutation");
    hit[x] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (data(image[i], image[j]) != data(i, j))
        throw Error(ErrorKind::NotDiagramSymmetry, image_text(image) + " does not preserve the Cartan matrix");
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j) m(image[j], j) = 1;
  return GroupElement(m, m.transpose(), Word{name.empty() ? image_text(image) : std::move(name)});
}

std::vector<GeneratorToken> parse_word(std::string_view text, const RootSystem& rs) {
  std::vector<GeneratorToken> out;
  const int size = rs.size();
  std::size_t pos = 0;
  while (true) {
    pos = text.find_first_not_of(" \t\n", pos);
    if (pos == std::string_view::npos) break;
    const std::size_t end = std::min(text.find_first_of(" \t\n", pos), text.size());
    const std::string raw(text.substr(pos, end - pos));
    const std::size_t column = pos + 1;
    pos = end;
    try {
      std::string tok = raw;
      bool inverted = false;
      if (tok.size() > 3 && tok.ends_with("^-1")) {
        inverted = true;
        tok.resize(tok.size() - 3);
      }
      if (tok == "1" || tok == "e") continue;
      GeneratorToken g;
      g.inverted = inverted;
      if (tok.starts_with("r:")) {
        g.kind = GeneratorToken::Kind::RootReflection;
        const std::string expr = tok.substr(2);
        g.root = parse_root_expr(expr, rs);
        if (rs.root_names().contains(expr)) g.name = expr;
        out.push_back(std::move(g));
        continue;
      }
      if (tok.starts_with("aut:")) {
        const std::string list = tok.substr(4);
        if (list.size() < 2 || list.front() != '[' || list.back() != ']')
          throw Error(ErrorKind::ParseError, "bad automorphism token '" + raw + "'");
        std::stringstream ss(list.substr(1, list.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            g.image.push_back(std::stoi(item));
          } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad automorphism entry '" + item + "'");
          }
        }
        g.kind = GeneratorToken::Kind::Automorphism;
        out.push_back(std::move(g));
        continue;
      }
      if (const Permutation* p = rs.find_automorphism(tok)) {
        g.kind = GeneratorToken::Kind::Automorphism;
        g.name = tok;
        g.image = *p;
        out.push_back(std::move(g));
        continue;
      }
      std::string digits;
      if (tok.starts_with("s_")) digits = tok.substr(2);
      else if (tok.size() >= 2 && tok[0] == 's') digits = tok.substr(1);
      const bool numeric = !digits.empty() &&
          std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (!numeric) throw Error(ErrorKind::ParseError, "unknown generator '" + raw + "'");
      std::vector<int> nodes;
      if (size <= 10 && !tok.starts_with("s_")) {
        for (char c : digits) nodes.push_back(c - '0');
      } else {
        nodes.push_back(std::stoi(digits));
      }
      if (inverted) std::reverse(nodes.begin(), nodes.end());
      for (int node : nodes) {
        if (node >= size) throw Error(ErrorKind::ParseError, "node " + std::to_string(node) + " out of range in '" + raw + "'");
        GeneratorToken r;
        r.kind = GeneratorToken::Kind::Reflection;
        r.index = node;
        out.push_back(r);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ParseError) throw;
      const std::string msg = e.what();
      const std::string prefix = std::string(to_string(ErrorKind::ParseError)) + ": ";
      throw Error(ErrorKind::ParseError, (msg.starts_with(prefix) ? msg.substr(prefix.size()) : msg) +
                                             " at column " + std::to_string(column));
    }
  }
  return out;
}

GroupElement evaluate_token(const GeneratorToken& token, const RootSystem& rs) {
  switch (token.kind) {
    case GeneratorToken::Kind::Reflection:
      return simple_reflection(token.index, rs.cartan());
    case GeneratorToken::Kind::Automorphism: {
      GroupElement a = diagram_automorphism(token.image, rs.cartan(), token.name);
      if (token.inverted) a = a.inverse();
      return a.with_word({token.text()});
    }
    case GeneratorToken::Kind::RootReflection:
      return reflection_through(token.root, rs).with_word({token.text()});
  }
  throw Error(ErrorKind::InvalidArgument, "unknown token kind");
}

GroupElement evaluate_word(std::span<const GeneratorToken> tokens, const RootSystem& rs) {
  GroupElement g = GroupElement::identity(rs.size());
  for (const auto& t : tokens) g = g * evaluate_token(t, rs);
  return g;
}

GroupElement evaluate_word(std::string_view text, const RootSystem& rs) {
  const auto tokens = parse_word(text, rs);
  return evaluate_word(tokens, rs);
}

IntMatrix delta_basis_matrix(const GroupElement& g, const CartanData& data) {
  const int n = data.size() - 1;
  // P: delta-basis coordinates -> root coordinates.
  IntMatrix p(n + 1, n + 1);
  for (int i = 1; i <= n; ++i) p(i, i - 1) = 1;
  for (int i = 0; i <= n; ++i) p(i, n) = data.marks[i];
  IntMatrix p_inv(n + 1, n + 1);
  for (int i = 1; i <= n; ++i) {
    p_inv(i - 1, i) = 1;
    p_inv(i - 1, 0) = -data.marks[i];
  }
  p_inv(n, 0) = 1;
  return p_inv * g.matrix() * p;
}

IntMatrix coweight_matrix(const GroupElement& g, const CartanData& data) {
  return delta_basis_matrix(g.inverse(), data).transpose();
}

CoweightVec act_on_coweight(const GroupElement& g, const CoweightVec& f, const CartanData& data) {
  if (f.size() != static_cast<std::size_t>(data.size()) || g.size() != data.size())
    throw Error(ErrorKind::DimensionMismatch, "coweight size does not match the element");
  const RationalMatrix n = to_rational(coweight_matrix(g, data));
  return CoweightVec(n * f.coords());
}

GroupElement reflection_through(const RootVec& root, const RootSystem& rs) {
  if (root.size() != static_cast<std::size_t>(rs.size()))
    throw Error(ErrorKind::DimensionMismatch, "root size does not match the ambient");
  const Rational norm = rs.bilinear(root, root);
  if (norm == 0 || !rs.is_real_root(root))
    throw Error(ErrorKind::NotARealRoot, format_root(root) + " is not a real root");
  const int n = rs.size();
  IntMatrix m = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j) {
    const Rational c = 2 * rs.bilinear(root, RootVec::basis(n, j)) / norm;
    if (!is_integer(c)) throw Error(ErrorKind::NotARealRoot, "non-integral reflection coefficient");
    for (int i = 0; i < n; ++i) m(i, j) -= c.numerator() * root[i];
  }
  std::string label = format_root(root);
  for (const auto& [name, v] : rs.root_names())
    if (v == root) {
      label = name;
      break;
    }
  return GroupElement(m, m, Word{"r:" + label});
}

std::optional<int> element_order(const GroupElement& g, int cap) {
  IntMatrix power = g.matrix();
  for (int k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = power * g.matrix();
  }
  return std::nullopt;
}

}  // namespace weylkit
