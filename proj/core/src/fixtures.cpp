#include "weylkit/fixtures.hpp"

#include "weylkit/error.hpp"

namespace weylkit {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::FixtureVerificationFailed, what);
}

struct NamedRoot {
  const char* name;
  const char* expr;
};

// Roots of the configuration, in the compressed notation.
constexpr NamedRoot kRoots[] = {
    {"gamma0", "a0123"}, {"gamma1", "a2345"}, {"eta0", "a012345"}, {"eta1", "a23"},
    {"beta0", "a35"},    {"beta1", "a12"},    {"beta2", "a34"},    {"beta3", "a02"},
};

}  // namespace

RootVec GammaEtaBetaSystem::root(std::string_view name) const {
  auto it = rs.root_names().find(std::string(name));
  if (it == rs.root_names().end()) throw Error(ErrorKind::InvalidArgument, "unknown root '" + std::string(name) + "'");
  return it->second;
}

GroupElement GammaEtaBetaSystem::reflection(std::string_view name) const {
  return reflection_through(root(name), rs);
}

std::vector<GeneratorToken> GammaEtaBetaSystem::cyclic_automorphisms() const {
  return parse_word("sigma12", rs);
}

GammaEtaBetaSystem build_geb_system() {
  RootSystem rs = make_root_system(TypeLabel{Family::D, 5, true});
  for (const auto& r : kRoots) rs.register_root_name(r.name, parse_root_expr(r.expr, rs));
  auto named = [&](const char* n) { return rs.root_names().at(n); };

  const GroupElement w = evaluate_word("s1 s3 s2", rs);
  const std::pair<const char*, const char*> images[] = {
      {"a0", "gamma0"},   {"a1223345", "gamma1"}, {"a1", "eta1"},  {"a0223345", "eta0"},
      {"a3", "beta1"},    {"a4", "beta2"},        {"a5", "beta0"}, {"a01223", "beta3"},
  };
  for (const auto& [src, dst] : images)
    require(w(parse_root_expr(src, rs)) == named(dst),
            std::string("w = s1 s3 s2 does not send ") + src + " to " + dst);

  auto build = [&](const char* name, std::vector<const char*> finite, const char* node) {
    std::vector<RootVec> roots;
    for (auto f : finite) roots.push_back(named(f));
    Subsystem s = affine_extension(make_subsystem(name, roots, rs), rs);
    require(s.simple_roots.front() == named(node), std::string("affine node of ") + name + " is not " + node);
    return s;
  };
  Subsystem gamma = build("gamma", {"gamma1"}, "gamma0");
  Subsystem eta = build("eta", {"eta1"}, "eta0");
  Subsystem beta = build("beta", {"beta1", "beta2", "beta3"}, "beta0");

  const Subsystem* blocks[] = {&gamma, &eta, &beta};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (const auto& x : blocks[a]->simple_roots)
        for (const auto& y : blocks[b]->simple_roots)
          require(rs.bilinear(x, y) == 0, blocks[a]->name + " and " + blocks[b]->name + " are not orthogonal");

  std::vector<GammaEtaBetaSystem::ReflectionWord> words = {
      {"gamma0", "s302 s1 s203"},     {"gamma1", "s253 s4 s352"},
      {"eta1", "s232"},               {"eta0", "s0145 s232 s5410"},
      {"beta1", "s121"},              {"beta2", "s343"},
      {"beta0", "s353"},              {"beta3", "s020"},
  };
  for (const auto& rw : words)
    require(evaluate_word(rw.word, rs) == reflection_through(named(rw.root_name.c_str()), rs),
            "reflection word for " + rw.root_name + " is wrong");

  return GammaEtaBetaSystem{std::move(rs), std::move(gamma), std::move(eta), std::move(beta),
                            w, std::move(words)};
}

const GammaEtaBetaSystem& geb_system() {
  static const GammaEtaBetaSystem system = build_geb_system();
  return system;
}

const NamedElement& find_named(const std::vector<NamedElement>& elements, std::string_view name) {
  for (const auto& e : elements)
    if (e.name == name) return e;
  throw Error(ErrorKind::InvalidArgument, "no element named '" + std::string(name) + "'");
}

std::vector<NamedElement> takenawa_elements(const GammaEtaBetaSystem& geb) {
  std::vector<NamedElement> out;
  const GroupElement gp = geb.word("s0 s1 s4 s5");
  const GroupElement cyc = geb.word("sigma12");
  out.push_back({"gprime", "g' = s0 s1 s4 s5", gp});
  out.push_back({"sigma12", "sigma1 sigma2", cyc});
  const GroupElement t_eta = geb.word("s0 s1 s4 s5 sigma12 sigma12 s2 s3 s2");
  require(t_eta == gp * cyc * cyc * geb.reflection("eta1"), "t_eta1 != g' (sigma1 sigma2)^2 s_eta1");
  out.push_back({"takenawa.t_eta1", "g' (sigma1 sigma2)^2 s2 s3 s2", t_eta});
  const GroupElement t_beta = geb.word("sigma12 r:beta3 r:beta2 r:beta1");
  require(t_beta == geb.word("sigma12 s020 s343 s121"), "t_beta1 words disagree");
  out.push_back({"takenawa.t_beta1", "sigma1 sigma2 s_beta3 s_beta2 s_beta1", t_beta});
  GroupElement product = GroupElement::identity(geb.rs.size());
  for (int i = 1; i <= 4; ++i) {
    const GroupElement t = cyc.pow(i - 1) * t_beta * cyc.pow(1 - i);
    product = product * t;
    out.push_back({"takenawa.T" + std::to_string(i),
                   "(sigma1 sigma2)^" + std::to_string(i - 1) + " t_beta1 (sigma1 sigma2)^" + std::to_string(1 - i), t});
  }
  require(product.is_identity(), "T1 T2 T3 T4 != 1");
  require(as_translation(t_eta * t_eta, geb.rs.cartan()).has_value(), "t_eta1^2 is not a translation");
  return out;
}

std::vector<NamedElement> second_variation_elements(const GammaEtaBetaSystem& geb) {
  std::vector<NamedElement> out;
  const GroupElement t_eta = geb.word("s0 s1 s4 s5 sigma12 s2 s3 s2");
  const GroupElement t_gamma = geb.word("sigma12 r:gamma1");
  require(t_gamma == geb.word("sigma12 s2534352"), "t_gamma1 words disagree");
  for (const auto* g : {&t_eta, &t_gamma})
    require(as_translation(g->pow(4), geb.rs.cartan()).has_value(), "fourth power is not a translation");
  out.push_back({"secondvar.t_eta1", "g' sigma1 sigma2 s2 s3 s2", t_eta});
  out.push_back({"secondvar.t_gamma1", "sigma1 sigma2 s_gamma1", t_gamma});
  return out;
}

namespace {

std::vector<RootVec> image_list(const RootSystem& rs, std::vector<std::string> exprs) {
  std::vector<RootVec> out;
  for (const auto& e : exprs) out.push_back(parse_root_expr(e, rs));
  return out;
}

}  // namespace

std::vector<OSDirection> os_directions(const GammaEtaBetaSystem& geb) {
  const RootSystem& rs = geb.rs;
  const auto second = second_variation_elements(geb);
  const auto first = takenawa_elements(geb);
  const GroupElement& t_eta = find_named(second, "secondvar.t_eta1").element;
  const GroupElement& t_gamma = find_named(second, "secondvar.t_gamma1").element;
  const GroupElement& t_beta = find_named(first, "takenawa.t_beta1").element;
  const int size = rs.size();

  std::vector<OSDirection> out;
  auto add = [&](std::string name, std::string definition, GroupElement g, const char* displayed,
                 std::vector<std::string> images) {
    auto t = as_translation(g, rs.cartan());
    require(t.has_value(), name + " is not a translation");
    OSDirection d{std::move(name), std::move(definition), std::move(g), *t,
                  parse_coweight_expr(displayed, size), image_list(rs, std::move(images))};
    out.push_back(std::move(d));
  };
  add("T1", "(t_gamma1 t_eta1)^-1", (t_gamma * t_eta).inverse(), "h1 - h2",
      {"a0 - d", "a1 - d", "a2 + d", "a3", "a4", "a5"});
  add("T2", "(sigma1 sigma2 s_beta2 s_beta1 s_beta0)^-2",
      geb.word("sigma12 r:beta2 r:beta1 r:beta0").pow(-2),
      "-h1 + h2 - h3 - h4 + h5", {"a0 - d", "a1 + d", "a2 - d", "a3 + d", "a4 - d", "a5 + d"});
  add("T3", "s_gamma1 (sigma1 sigma2 s_beta3 s_beta2 s_beta1)^-1",
      geb.reflection("gamma1") * t_beta.inverse(), "-h2 + h3 - h4",
      {"a0 - d", "a1", "a2 + d", "a3 - d", "a4 + d", "a5"});
  add("T4", "t_beta1 (sigma1 sigma2 s_beta1 s_beta0 s_beta3)",
      t_beta * geb.word("sigma12 r:beta1 r:beta0 r:beta3"), "h2 - h3",
      {"a0", "a1", "a2 - d", "a3 + d", "a4", "a5"});
  return out;
}

std::vector<CoweightVec> subsystem_fundamental_weights(const Subsystem& sub, const RootSystem& rs) {
  const auto finite = sub.finite_simple_roots();
  const std::size_t m = finite.size();
  const std::size_t skip = sub.affine() ? 1 : 0;
  // B(j, k) = A(k, j) over the finite nodes; coroot = B h.
  RationalMatrix b(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) b(j, k) = sub.sub_cartan(static_cast<int>(k + skip), static_cast<int>(j + skip));
  const auto inv = inverse(b);
  if (!inv) throw Error(ErrorKind::InvalidArgument, "finite part of '" + sub.name + "' is degenerate");
  std::vector<CoweightVec> coroots;
  for (const auto& r : finite) coroots.push_back(rs.coroot(r));
  std::vector<CoweightVec> out;
  for (std::size_t k = 0; k < m; ++k) {
    CoweightVec h(rs.size());
    for (std::size_t j = 0; j < m; ++j) h += (*inv)(k, j) * coroots[j];
    out.push_back(std::move(h));
  }
  return out;
}

ExampleA1 example_a1() {
  RootSystem rs = make_root_system(TypeLabel{Family::A, 1, true});
  GroupElement t = evaluate_word("pi s1", rs);
  require(t == translation_element(CoweightVec::fundamental(2, 1), rs.cartan()), "pi s1 != t_h1");
  return ExampleA1{std::move(rs), std::move(t)};
}

ExampleA3 example_a3() {
  RootSystem rs = make_root_system(TypeLabel{Family::A, 3, true});
  for (int i = 0; i < 4; ++i) rs.register_root_name("beta" + std::to_string(i), RootVec::basis(4, i));
  GroupElement rot = evaluate_word("p1 p2", rs);
  for (int i = 0; i < 4; ++i)
    require(rot(RootVec::basis(4, i)) == RootVec::basis(4, (i + 1) % 4), "p1 p2 is not the rotation");
  GroupElement t_h1 = evaluate_word("p1 p2 s3 s2 s1", rs);
  require(t_h1 == translation_element(CoweightVec::fundamental(4, 1), rs.cartan()), "p1 p2 s3 s2 s1 != t_h1");
  std::vector<GroupElement> t;
  for (int i = 1; i <= 4; ++i) t.push_back(rot.pow(i - 1) * t_h1 * rot.pow(1 - i));
  require((t[0] * t[1] * t[2] * t[3]).is_identity(), "t1 t2 t3 t4 != 1");
  return ExampleA3{std::move(rs), std::move(rot), std::move(t_h1), std::move(t)};
}

}  // namespace weylkit
