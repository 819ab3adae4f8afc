#include "weylkit/lattice.hpp"

#include <cctype>
#include <deque>
#include <sstream>

#include "weylkit/error.hpp"

namespace weylkit {

namespace {

void require_size(std::size_t got, const CartanData& data, const char* what) {
  if (got != static_cast<std::size_t>(data.size()))
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has size " +
                                                  std::to_string(got) + ", expected " +
                                                  std::to_string(data.size()));
}

// <v, coroot_i> = sum_j v_j A(j, i).
std::int64_t coroot_pairing(const RootVec& v, int i, const CartanData& data) {
  std::int64_t s = 0;
  for (int j = 0; j < data.size(); ++j) s += v[j] * data(j, i);
  return s;
}

}  // namespace

RootVec null_root(const CartanData& data) {
  if (!data.affine) throw Error(ErrorKind::InvalidArgument, "null root of finite data");
  return RootVec(data.marks);
}

RootVec simple_root(const CartanData& data, int i) {
  if (i < 0 || i >= data.size()) throw Error(ErrorKind::InvalidArgument, "node index out of range");
  return RootVec::basis(data.size(), i);
}

Rational pair(const RootVec& v, const CoweightVec& f, const CartanData& data) {
  require_size(v.size(), data, "root vector");
  require_size(f.size(), data, "coweight");
  const int n = data.size() - 1;
  Rational s = 0;
  Rational a0 = f.h_delta();
  for (int i = 1; i <= n; ++i) {
    s += Rational(v[i]) * f.h(i);
    a0 -= Rational(data.marks[i]) * f.h(i);
  }
  return s + Rational(v[0]) * a0;
}

CoweightVec simple_coroot(int i, const CartanData& data) {
  if (i < 0 || i >= data.size()) throw Error(ErrorKind::InvalidArgument, "node index out of range");
  CoweightVec f(data.size());
  for (int j = 1; j < data.size(); ++j) f.h(j) = data(j, i);
  return f;
}

std::vector<RootVec> enumerate_finite_roots(const CartanData& data, std::size_t cap) {
  const int first = data.affine ? 1 : 0;
  const int size = data.size();
  std::unordered_set<RootVec, RootVecHash> seen;
  std::vector<RootVec> out;
  std::deque<RootVec> queue;
  for (int i = first; i < size; ++i) {
    auto r = RootVec::basis(size, i);
    seen.insert(r);
    out.push_back(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    RootVec v = queue.front();
    queue.pop_front();
    for (int i = first; i < size; ++i) {
      const auto k = coroot_pairing(v, i, data);
      if (k == 0) continue;
      RootVec w = v;
      w[i] -= k;
      if (seen.insert(w).second) {
        if (seen.size() > cap)
          throw Error(ErrorKind::NonTerminating, "root closure exceeded " + std::to_string(cap));
        out.push_back(w);
        queue.push_back(std::move(w));
      }
    }
  }
  return out;
}

FinitePart finite_part(const RootVec& v, const CartanData& data) {
  require_size(v.size(), data, "root vector");
  const RootVec delta = null_root(data);
  FinitePart fp;
  fp.k = v[0];
  fp.finite = v - fp.k * delta;
  return fp;
}

RootSystem::RootSystem(CartanData data, std::size_t root_cap) : data_(std::move(data)) {
  if (!data_.affine) throw Error(ErrorKind::InvalidArgument, "RootSystem needs affine data");
  gram_ = bilinear_gram(data_);
  delta_ = null_root(data_);
  roots_ = enumerate_finite_roots(data_, root_cap);
  root_set_.insert(roots_.begin(), roots_.end());
}

Rational RootSystem::bilinear(const RootVec& u, const RootVec& v) const {
  require_size(u.size(), data_, "root vector");
  require_size(v.size(), data_, "root vector");
  Rational s = 0;
  for (int i = 0; i < size(); ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < size(); ++j)
      if (v[j] != 0) s += Rational(u[i] * v[j]) * gram_(i, j);
  }
  return s;
}

bool RootSystem::is_real_root(const RootVec& v) const {
  if (v.size() != static_cast<std::size_t>(size())) return false;
  return is_finite_root(finite_part(v, data_).finite);
}

bool RootSystem::is_positive(const RootVec& v) {
  bool nonzero = false;
  for (auto x : v.coords()) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

CoweightVec RootSystem::coroot(const RootVec& v) const {
  const Rational norm = bilinear(v, v);
  if (norm == 0) throw Error(ErrorKind::NotARealRoot, "isotropic vector " + format_root(v));
  CoweightVec f(size());
  for (int i = 0; i < size(); ++i) {
    if (v[i] == 0) continue;
    f += (Rational(v[i]) * gram_(i, i) / norm) * simple_coroot(i, data_);
  }
  return f;
}

void RootSystem::register_automorphism(std::string name, Permutation image) {
  if (image.size() != static_cast<std::size_t>(size()))
    throw Error(ErrorKind::DimensionMismatch, "automorphism '" + name + "' has wrong length");
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (data_(image[i], image[j]) != data_(i, j))
        throw Error(ErrorKind::NotDiagramSymmetry, "'" + name + "' does not preserve the Cartan matrix");
  auts_[std::move(name)] = std::move(image);
}

const Permutation* RootSystem::find_automorphism(const std::string& name) const {
  auto it = auts_.find(name);
  return it == auts_.end() ? nullptr : &it->second;
}

void RootSystem::register_root_name(std::string name, RootVec root) {
  require_size(root.size(), data_, "root vector");
  root_names_[std::move(name)] = std::move(root);
}

namespace {

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

}  // namespace

void register_standard_automorphisms(RootSystem& rs) {
  const auto& label = rs.cartan().label;
  if (!label || !label->affine) return;
  const int size = rs.size();
  if (label->family == Family::D) {
    Permutation s1(size), s2(size);
    for (int i = 0; i < size; ++i) {
      s1[i] = i;
      s2[i] = size - 1 - i;
    }
    std::swap(s1[0], s1[1]);
    rs.register_automorphism("sigma1", s1);
    rs.register_automorphism("sigma2", s2);
    rs.register_automorphism("sigma12", compose(s1, s2));
    rs.register_automorphism("sigma21", compose(s2, s1));
  } else if (label->rank == 1) {
    rs.register_automorphism("pi", {1, 0});
  } else {
    Permutation rot(size);
    for (int i = 0; i < size; ++i) rot[i] = (i + 1) % size;
    rs.register_automorphism("rot", rot);
    if (label->rank == 3) {
      const Permutation p1{0, 3, 2, 1}, p2{3, 2, 1, 0};
      rs.register_automorphism("p1", p1);
      rs.register_automorphism("p2", p2);
      rs.register_automorphism("p12", compose(p1, p2));
      rs.register_automorphism("p21", compose(p2, p1));
    }
  }
}

RootSystem make_root_system(const TypeLabel& label) {
  if (!label.affine) throw Error(ErrorKind::UnsupportedType, "root systems are built for affine types");
  RootSystem rs(load_builtin(label));
  register_standard_automorphisms(rs);
  return rs;
}

// ---- notation -------------------------------------------------------------

std::optional<std::string> compressed(const RootVec& v) {
  if (v.size() > 10 || v.is_zero()) return std::nullopt;
  int sign = 0;
  for (auto x : v.coords()) {
    if (x == 0) continue;
    const int s = x > 0 ? 1 : -1;
    if (sign != 0 && s != sign) return std::nullopt;
    sign = s;
  }
  std::string out = sign < 0 ? "-a" : "a";
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::int64_t k = 0; k < v[i] * sign; ++k) out += static_cast<char>('0' + i);
  return out;
}

std::string format_root(const RootVec& v) {
  if (auto c = compressed(v)) return *c;
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

std::string describe_root(const RootVec& v, const RootSystem& rs) {
  auto shifted = [](std::string base, std::int64_t k) {
    if (k == 0) return base;
    const std::int64_t a = k < 0 ? -k : k;
    return base + (k < 0 ? " - " : " + ") + (a == 1 ? "" : std::to_string(a)) + "d";
  };
  if (v == rs.delta()) return "d";
  for (int sign : {1, -1})
    for (std::int64_t k : {0, 1, -1, 2, -2, 3, -3}) {
      const RootVec x = v - k * rs.delta();
      for (const auto& [name, r] : rs.root_names())
        if (sign * r == x) return shifted(sign > 0 ? name : "-" + name, k);
    }
  // Smallest finite part; ties go to a nonnegative one.
  std::int64_t best_k = 0, best = -1;
  for (std::int64_t k : {0, 1, -1, 2, -2, 3, -3, 4, -4}) {
    const RootVec x = v - k * rs.delta();
    std::int64_t score = 0;
    for (auto c : x.coords()) score += 2 * (c < 0 ? -c : c);
    if (!RootSystem::is_positive(x)) score += 1;
    if (best < 0 || score < best) {
      best = score;
      best_k = k;
    }
  }
  const RootVec x = v - best_k * rs.delta();
  return shifted(x.is_zero() ? "0" : format_root(x), best_k);
}

namespace {

struct Term {
  int sign = 1;
  std::string text;
};

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits at top-level '+'/'-' (outside brackets).
std::vector<Term> split_terms(std::string_view text) {
  std::vector<Term> terms;
  Term cur;
  int depth = 0;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (!strip(cur.text).empty()) {
        terms.push_back(cur);
        cur = Term{};
      }
      if (ch == '-') cur.sign = -cur.sign;
      any = true;
      continue;
    }
    cur.text += ch;
    any = true;
  }
  if (strip(cur.text).empty()) {
    if (any) throw Error(ErrorKind::ParseError, "expression ends with an operator");
    throw Error(ErrorKind::ParseError, "empty expression");
  }
  terms.push_back(cur);
  for (auto& t : terms) t.text = strip(t.text);
  return terms;
}

// Leading integer or fraction coefficient; returns the rest.
std::pair<Rational, std::string> split_coefficient(const std::string& term) {
  std::size_t i = 0;
  while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
  if (i == 0) return {Rational(1), term};
  std::int64_t num = std::stoll(term.substr(0, i));
  std::int64_t den = 1;
  std::size_t j = i;
  if (j < term.size() && term[j] == '/') {
    std::size_t k = j + 1;
    while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
    if (k == j + 1) throw Error(ErrorKind::ParseError, "bad fraction in '" + term + "'");
    den = std::stoll(term.substr(j + 1, k - j - 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + term + "'");
    j = k;
  }
  std::string rest = strip(std::string_view(term).substr(j));
  if (!rest.empty() && rest.front() == '*') rest = strip(std::string_view(rest).substr(1));
  return {Rational(num, den), rest};
}

RootVec parse_atom(const std::string& atom, const RootSystem& rs) {
  const int size = rs.size();
  if (auto it = rs.root_names().find(atom); it != rs.root_names().end()) return it->second;
  if (atom == "d" || atom == "delta") return rs.delta();
  if (!atom.empty() && atom.front() == '[') {
    if (atom.back() != ']') throw Error(ErrorKind::ParseError, "unterminated list '" + atom + "'");
    std::vector<std::int64_t> coords;
    std::stringstream ss(atom.substr(1, atom.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = strip(item);
      try {
        std::size_t used = 0;
        coords.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad coordinate '" + item + "'");
      }
    }
    if (coords.size() != static_cast<std::size_t>(size))
      throw Error(ErrorKind::DimensionMismatch, "coordinate list '" + atom + "' has wrong length");
    return RootVec(std::move(coords));
  }
  if (atom.size() >= 2 && atom.front() == 'a') {
    if (size > 10) throw Error(ErrorKind::ParseError, "compressed roots need at most 10 nodes");
    RootVec v(size);
    for (std::size_t i = 1; i < atom.size(); ++i) {
      const char ch = atom[i];
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch - '0' >= size)
        throw Error(ErrorKind::ParseError, "bad node '" + std::string(1, ch) + "' in '" + atom + "'");
      v[ch - '0'] += 1;
    }
    return v;
  }
  throw Error(ErrorKind::ParseError, "unknown root '" + atom + "'");
}

}  // namespace

RootVec parse_root_expr(std::string_view text, const RootSystem& rs) {
  RootVec sum(rs.size());
  for (const auto& term : split_terms(text)) {
    auto [coef, atom] = split_coefficient(term.text);
    if (!is_integer(coef)) throw Error(ErrorKind::ParseError, "root coefficients must be integers");
    if (atom.empty()) throw Error(ErrorKind::ParseError, "missing root after coefficient");
    sum += (term.sign * coef.numerator()) * parse_atom(atom, rs);
  }
  return sum;
}

CoweightVec parse_coweight_expr(std::string_view text, int size) {
  CoweightVec f(size);
  for (const auto& term : split_terms(text)) {
    auto [coef, atom] = split_coefficient(term.text);
    coef *= term.sign;
    if (atom == "hd" || atom == "h_d" || atom == "hdelta") {
      f.h_delta() += coef;
      continue;
    }
    if (atom.size() < 2 || atom.front() != 'h')
      throw Error(ErrorKind::ParseError, "unknown coweight '" + atom + "'");
    std::size_t used = 0;
    int idx = 0;
    try {
      idx = std::stoi(atom.substr(1), &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad index in '" + atom + "'");
    }
    if (used + 1 != atom.size() || idx < 1 || idx >= size)
      throw Error(ErrorKind::ParseError, "index out of range in '" + atom + "'");
    f.h(idx) += coef;
  }
  return f;
}

std::string format_coweight(const CoweightVec& f) {
  std::string out;
  auto emit = [&](const Rational& c, const std::string& name) {
    if (c == 0) return;
    const Rational a = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += to_string(a) + (a.denominator() == 1 ? "" : " ");
    out += name;
  };
  for (std::size_t i = 1; i < f.size(); ++i) emit(f.h(i), "h" + std::to_string(i));
  emit(f.h_delta(), "hd");
  return out.empty() ? "0" : out;
}

}  // namespace weylkit
