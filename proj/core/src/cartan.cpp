#include "weylkit/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "weylkit/error.hpp"

namespace weylkit {

std::string TypeLabel::to_string() const {
  std::string s(1, family == Family::A ? 'A' : 'D');
  s += std::to_string(rank);
  if (affine) s += '~';
  return s;
}

TypeLabel TypeLabel::parse(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty type label");
  TypeLabel label;
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  if (f == 'A') {
    label.family = Family::A;
  } else if (f == 'D') {
    label.family = Family::D;
  } else {
    throw Error(ErrorKind::UnsupportedType, "unsupported family in '" + t + "'");
  }
  std::size_t pos = 1;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
  if (pos == 1) throw Error(ErrorKind::ParseError, "missing rank in '" + t + "'");
  label.rank = std::stoi(t.substr(1, pos - 1));
  const std::string rest = t.substr(pos);
  if (rest == "~" || rest == "^(1)" || rest == "^1" || rest == "(1)") {
    label.affine = true;
  } else if (!rest.empty()) {
    throw Error(ErrorKind::ParseError, "unexpected suffix '" + rest + "' in type label");
  }
  if (label.family == Family::A && label.rank < 1)
    throw Error(ErrorKind::UnsupportedType, "A_n needs n >= 1");
  if (label.family == Family::D && label.rank < 4)
    throw Error(ErrorKind::UnsupportedType, "D_n needs n >= 4 (use A1xA1 or A3)");
  return label;
}

namespace {

std::string cell(int i, int j) {
  return "A[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

// Propagates (a_i, a_i) along edges; nullopt when inconsistent.
std::optional<std::vector<Rational>> symmetrize(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<Rational> len(n, Rational(0));
  std::vector<int> component(n, -1);
  int comps = 0;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    component[start] = comps;
    len[start] = 1;
    std::vector<int> members{start};
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || a(i, j) == 0 || a(j, i) == 0) continue;
        // A(j, i) l_i = A(i, j) l_j
        const Rational lj = Rational(a(j, i)) * len[i] / Rational(a(i, j));
        if (component[j] < 0) {
          component[j] = comps;
          len[j] = lj;
          members.push_back(j);
          q.push(j);
        } else if (len[j] != lj) {
          return std::nullopt;
        }
      }
    }
    Rational longest = 0;
    for (int m : members) longest = std::max(longest, len[m]);
    for (int m : members) len[m] = len[m] * 2 / longest;
    ++comps;
  }
  return len;
}

}  // namespace

ValidationReport validate(const CartanData& data) {
  ValidationReport report;
  const IntMatrix& a = data.matrix;
  if (!a.square() || a.rows() == 0) {
    report.issues.push_back("matrix must be square and non-empty");
    return report;
  }
  const int n = static_cast<int>(a.rows());
  bool pattern_ok = true;
  for (int i = 0; i < n; ++i) {
    if (a(i, i) != 2) report.issues.push_back(cell(i, i) + " must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) {
        report.issues.push_back(cell(i, j) + " must be <= 0");
        pattern_ok = false;
      }
      if (i < j && ((a(i, j) == 0) != (a(j, i) == 0))) {
        report.issues.push_back("zero pattern asymmetry at " + cell(i, j) + " / " + cell(j, i));
        pattern_ok = false;
      }
      if (i < j && a(i, j) * a(j, i) > 4)
        report.issues.push_back("bond " + std::to_string(i) + "-" + std::to_string(j) +
                                " is not crystallographic");
    }
  }
  if (pattern_ok && !symmetrize(a)) report.issues.push_back("matrix is not symmetrizable");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a(i, j) * a(j, i) == 4 && n != 2)
        report.issues.push_back("infinite bond " + std::to_string(i) + "-" + std::to_string(j) +
                                " only occurs in rank-2 affine data");
  if (data.affine) {
    if (data.marks.size() != static_cast<std::size_t>(n)) {
      report.issues.push_back("marks must have one entry per node");
    } else {
      if (data.marks[0] != 1) report.issues.push_back("mark c_0 must be 1");
      for (int i = 0; i < n; ++i)
        if (data.marks[i] <= 0) report.issues.push_back("mark c_" + std::to_string(i) + " must be positive");
      for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) s += data.marks[i] * a(i, j);
        if (s != 0) {
          report.issues.push_back("A.c != 0 (column " + std::to_string(j) + " gives " +
                                  std::to_string(s) + ")");
        }
      }
    }
  } else if (!data.marks.empty()) {
    report.issues.push_back("finite data carries no marks");
  }
  return report;
}

std::vector<std::int64_t> compute_marks(const IntMatrix& matrix) {
  const auto kernel = null_space(to_rational(matrix.transpose()));
  if (kernel.size() != 1)
    throw Error(ErrorKind::InvalidCartan,
                "kernel dimension is " + std::to_string(kernel.size()) + ", expected 1");
  const auto& v = kernel.front();
  if (v[0] == 0) throw Error(ErrorKind::InvalidCartan, "kernel vector has c_0 = 0");
  std::vector<std::int64_t> marks;
  for (const auto& x : v) {
    const Rational c = x / v[0];
    if (!is_integer(c) || c <= 0)
      throw Error(ErrorKind::InvalidCartan, "kernel vector is not positive integral with c_0 = 1");
    marks.push_back(c.numerator());
  }
  return marks;
}

CartanData make_cartan(IntMatrix matrix, std::optional<std::vector<std::int64_t>> marks,
                       bool affine) {
  CartanData data{std::move(matrix), {}, affine, std::nullopt};
  if (affine) {
    if (marks) {
      data.marks = std::move(*marks);
    } else {
      if (!data.matrix.square() || data.matrix.rows() == 0)
        throw Error(ErrorKind::InvalidCartan, "matrix must be square and non-empty");
      data.marks = compute_marks(data.matrix);
    }
  } else if (marks && !marks->empty()) {
    data.marks = std::move(*marks);
  }
  const auto report = validate(data);
  if (!report.ok()) {
    std::string joined;
    for (const auto& issue : report.issues) joined += (joined.empty() ? "" : "; ") + issue;
    throw Error(ErrorKind::InvalidCartan, joined);
  }
  return data;
}

CartanData load_builtin(const TypeLabel& label) {
  const int r = label.rank;
  if (label.family == Family::A && r < 1) throw Error(ErrorKind::UnsupportedType, label.to_string());
  if (label.family == Family::D && r < 4) throw Error(ErrorKind::UnsupportedType, label.to_string());
  const int n = label.affine ? r + 1 : r;
  IntMatrix a = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  std::vector<std::int64_t> marks;
  if (label.family == Family::A) {
    if (!label.affine) {
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    } else if (r == 1) {
      a(0, 1) = a(1, 0) = -2;
      marks = {1, 1};
    } else {
      for (int i = 0; i < n; ++i) link(i, (i + 1) % n);
      marks.assign(n, 1);
    }
  } else if (!label.affine) {
    // Bourbaki: path 0..r-3 with r-2 and r-1 hanging off r-3.
    for (int i = 0; i + 1 <= r - 3; ++i) link(i, i + 1);
    link(r - 3, r - 2);
    link(r - 3, r - 1);
  } else {
    // 0 and 1 on node 2, path 2..r-2, r-1 and r on node r-2.
    link(0, 2);
    link(1, 2);
    for (int i = 2; i + 1 <= r - 2; ++i) link(i, i + 1);
    link(r - 2, r - 1);
    link(r - 2, r);
    marks.assign(n, 2);
    marks[0] = marks[1] = marks[r - 1] = marks[r] = 1;
  }
  CartanData data = make_cartan(std::move(a), label.affine ? std::optional(marks) : std::nullopt,
                                label.affine);
  data.label = label;
  return data;
}

int bond_order(const CartanData& data, int i, int j) {
  if (i == j) return 1;
  switch (data(i, j) * data(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    case 4: return 0;
    default:
      throw Error(ErrorKind::InvalidCartan, "bond " + std::to_string(i) + "-" + std::to_string(j) +
                                                " is not crystallographic");
  }
}

std::vector<Rational> root_lengths(const CartanData& data) {
  auto len = symmetrize(data.matrix);
  if (!len) throw Error(ErrorKind::NotSymmetrizable, "no consistent root length assignment");
  return *len;
}

RationalMatrix bilinear_gram(const CartanData& data) {
  const auto len = root_lengths(data);
  const int n = data.size();
  RationalMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Rational(data(j, i)) * len[i] / 2;
  return g;
}

namespace {

Rational form(const RootVec& u, const RootVec& v, const RationalMatrix& g) {
  if (u.size() != g.rows() || v.size() != g.rows())
    throw Error(ErrorKind::DimensionMismatch, "root and Gram sizes differ");
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) s += Rational(u[i] * v[j]) * g(i, j);
  }
  return s;
}

}  // namespace

std::vector<DiagramComponent> classify_components(std::span<const RootVec> input,
                                                  const RationalMatrix& gram) {
  std::vector<RootVec> roots(input.begin(), input.end());
  // Descending, so a_1 precedes a_2 and so on.
  std::sort(roots.begin(), roots.end(), std::greater<>());
  if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
    throw Error(ErrorKind::InvalidArgument, "duplicate roots");
  const std::size_t m = roots.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (form(roots[i], roots[i], gram) != 2)
      throw Error(ErrorKind::UnrecognizedDiagram, "root of norm other than 2");
    for (std::size_t j = i + 1; j < m; ++j) {
      const Rational b = form(roots[i], roots[j], gram);
      if (b == 0) continue;
      if (b != -1) throw Error(ErrorKind::UnrecognizedDiagram, "pairing outside {0, -1}");
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  }

  std::vector<bool> seen(m, false);
  std::vector<DiagramComponent> out;
  for (std::size_t start = 0; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (auto y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    std::sort(members.begin(), members.end());
    std::size_t edges = 0;
    for (auto x : members) edges += adj[x].size();
    edges /= 2;
    if (edges + 1 != members.size())
      throw Error(ErrorKind::UnrecognizedDiagram, "component contains a cycle");

    // Walk from `from` away from `avoid` until a leaf.
    auto arm = [&](std::size_t from, std::size_t avoid) {
      std::vector<std::size_t> path{from};
      std::size_t prev = avoid, cur = from;
      while (true) {
        std::size_t next = m;
        for (auto y : adj[cur])
          if (y != prev) next = y;
        if (next == m || adj[cur].size() > 2) break;
        path.push_back(next);
        prev = cur;
        cur = next;
      }
      return path;
    };

    std::vector<std::size_t> branch;
    for (auto x : members) {
      if (adj[x].size() > 3) throw Error(ErrorKind::UnrecognizedDiagram, "node of degree > 3");
      if (adj[x].size() == 3) branch.push_back(x);
    }
    DiagramComponent comp;
    const int rank = static_cast<int>(members.size());
    std::vector<std::size_t> order;
    if (branch.empty()) {
      comp.type = TypeLabel{Family::A, rank, false};
      if (rank == 1) {
        order = members;
      } else {
        std::vector<std::size_t> leaves;
        for (auto x : members)
          if (adj[x].size() == 1) leaves.push_back(x);
        order = arm(std::min(leaves[0], leaves[1]), m);
      }
    } else {
      if (branch.size() > 1) throw Error(ErrorKind::UnrecognizedDiagram, "more than one fork");
      const auto b = branch.front();
      std::vector<std::vector<std::size_t>> arms;
      for (auto y : adj[b]) arms.push_back(arm(y, b));
      std::sort(arms.begin(), arms.end(), [](const auto& p, const auto& q) {
        if (p.size() != q.size()) return p.size() > q.size();
        return p.front() < q.front();
      });
      if (arms[1].size() != 1 || arms[2].size() != 1)
        throw Error(ErrorKind::UnrecognizedDiagram, "fork is not of type D");
      comp.type = TypeLabel{Family::D, rank, false};
      order.assign(arms[0].rbegin(), arms[0].rend());
      order.push_back(b);
      order.push_back(arms[1].front());
      order.push_back(arms[2].front());
    }
    for (auto x : order) comp.simple_roots.push_back(roots[x]);
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<DiagramComponent> classify_components(std::span<const RootVec> roots,
                                                  const CartanData& ambient) {
  return classify_components(roots, bilinear_gram(ambient));
}

}  // namespace weylkit
