#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <tuple>
#include <memory>
#include <string>
#include <vector>

#include "lubanski/cli/document.hpp"
#include "lubanski/identities.hpp"

namespace lubanski::cli {

struct Context {
  FixtureSet fixtures;
  std::vector<Rational> helicity_candidates;

  // Mass of a massive fixture; the set was validated to have rational masses.
  static Rational mass_of(const MomentumSample& s) {
    Rational m;
    if (!lubanski::detail::rational_sqrt(s.mass_squared(), m)) throw DomainError("irrational mass at " + s.str());
    return m;
  }
  Rational reference_mass() const { return fixtures.massive.empty() ? Rational(2) : mass_of(fixtures.massive.front()); }
};

inline Context default_context() { return {default_fixtures(), default_helicity_candidates()}; }

struct CheckDescriptor {
  std::string suite;
  std::string check_id;
  std::string anchor;
  std::function<std::vector<std::string>(const Context&)> shapes;  // assembled matrices, for explain
  std::function<std::vector<Record>(const Context&)> run;
};

namespace detail {

struct RepInfo {
  RepKind kind;
  const char* prefix;
  const char* anchor;
  std::map<std::string, std::size_t> spectrum;  // c -> multiplicity of W^2 = c m^2
};

inline const std::vector<RepInfo>& rep_table() {
  static const std::vector<RepInfo> t = {
      {RepKind::dirac_bispinor, "dirac", "bispinor representation generated by Sigma/2", {{"-3/4", 4}}},
      {RepKind::weyl_left, "weyl", "left two-spinor representation generated by -Sigma/2", {{"-3/4", 2}}},
      {RepKind::vector, "vector", "four-vector representation m^{ab}", {{"0", 1}, {"-2", 3}}},
      {RepKind::so3c_vector, "so3c", "complex three-vector representation via SO(3,C)", {{"-2", 3}}},
      {RepKind::slash_conjugation, "slash", "bispinor conjugation acting on slashed four-vectors", {{"0", 4}, {"-2", 12}}},
      {RepKind::spinor2_conjugation, "spinor2", "two-spinor conjugation acting on 2x2 matrices", {{"0", 1}, {"-2", 3}}},
      {RepKind::sym_tensor, "sym", "symmetric second-rank tensors", {{"0", 2}, {"-2", 3}, {"-6", 5}}},
  };
  return t;
}

inline std::shared_ptr<const Representation> rep_ptr(RepKind k) {
  static std::mutex mu;
  static std::map<RepKind, std::shared_ptr<const Representation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, std::make_shared<const Representation>(build_representation(k))).first;
  return it->second;
}

inline json momentum_inputs(const MomentumSample& p) { return json{{"p", p.str()}, {"p2", rational_string(p.mass_squared())}}; }

inline json momentum_inputs(const MomentumSample& p, const Rational& m) {
  json j = momentum_inputs(p);
  j["m"] = rational_string(m);
  return j;
}

inline Record make_record(const CheckDescriptor& d, json inputs, const Report& r, json extra = json::object()) {
  Record rec{d.suite, d.check_id, d.anchor, std::move(inputs), false, json::object()};
  for (auto& [k, v] : extra.items()) rec.witness[k] = v;
  add_report(rec.witness, r);
  rec.passed = r.passed() && witness_passed(rec.witness);
  return rec;
}

inline std::string shape_line(Family f, const FourVector& p, const Rational& m) {
  LinearSystem s = assemble(f, p, m);
  std::string line = to_string(f) + ": total " + s.total.shape() + " from " + std::to_string(s.blocks.size()) + " block(s)";
  if (!s.blocks.empty()) line += " of " + s.blocks.front().matrix.shape();
  return line;
}

inline std::vector<MomentumSample> fixtures_for(const Context& c, Family f) {
  return family_info(f).massless_only ? c.fixtures.massless : c.fixtures.massive;
}

inline Rational mass_for(Family f, const MomentumSample& s) { return family_info(f).massless_only ? Rational(0) : Context::mass_of(s); }

// Consecutive pairs (k, k+1) with equal shells, plus the diagonal pair at the first fixture.
inline std::vector<std::pair<MomentumSample, MomentumSample>> shell_pairs(const std::vector<MomentumSample>& f) {
  std::vector<std::pair<MomentumSample, MomentumSample>> out;
  if (f.empty()) return out;
  out.emplace_back(f.front(), f.front());
  for (std::size_t k = 0; k + 1 < f.size(); ++k)
    if (f[k].mass_squared() == f[k + 1].mass_squared()) out.emplace_back(f[k], f[k + 1]);
  return out;
}

struct KernelExpectation {
  Family family;
  std::size_t dim;
};

inline const std::vector<KernelExpectation>& kernel_table() {
  static const std::vector<KernelExpectation> t = {
      {Family::dirac_gamma, 2},        {Family::dirac_sigma, 2},      {Family::dirac_pl, 2},
      {Family::dirac_sigma_conjugate, 2}, {Family::weyl_sigma, 1},    {Family::weyl_compact, 1},
      {Family::proca, 3},              {Family::maxwell_so3c, 1},     {Family::maxwell_curl_div, 1},
      {Family::maxwell_spinor, 1},     {Family::maxwell_laport, 1},   {Family::maxwell_quaternion, 1},
      {Family::maxwell_tensor, 1},     {Family::fierz_pauli_full, 5}, {Family::fierz_pauli_a, 5},
      {Family::fierz_pauli_final, 5},  {Family::fierz_pauli_gauge, 5}, {Family::einstein_linear, 6},
      {Family::einstein_gauge, 6},
  };
  return t;
}

struct EquivalenceSpec {
  const char* check_id;
  Family a;
  Family b;
  std::size_t dim;
  const char* anchor;
};

inline const std::vector<EquivalenceSpec>& equivalence_table() {
  static const std::vector<EquivalenceSpec> t = {
      {"dirac.sigma_equivalence", Family::dirac_gamma, Family::dirac_sigma, 2,
       "the Sigma-form overdetermined system is equivalent to the gamma-form Dirac equation"},
      {"dirac.pl_equivalence", Family::dirac_gamma, Family::dirac_pl, 2,
       "the Pauli-Lubanski overdetermined system is equivalent to the Dirac equation"},
      {"weyl.compact_equivalence", Family::weyl_sigma, Family::weyl_compact, 1,
       "the overdetermined helicity -1/2 system reduces to sigma^mu p_mu phi = 0"},
      {"maxwell.curl_div_equivalence", Family::maxwell_so3c, Family::maxwell_curl_div, 1,
       "the SO(3,C) system implies div F = 0, curl F = i d_0 F"},
      {"maxwell.spinor_equivalence", Family::maxwell_so3c, Family::maxwell_spinor, 1,
       "the second-rank spinor form is equivalent to the complex Maxwell equations"},
      {"maxwell.laport_equivalence", Family::maxwell_so3c, Family::maxwell_laport, 1,
       "the quaternion-like Pauli form is equivalent to the complex Maxwell equations"},
      {"maxwell.quaternion_equivalence", Family::maxwell_so3c, Family::maxwell_quaternion, 1,
       "the 4x4 matrix form d Q = 0 is equivalent to the complex Maxwell equations"},
      {"maxwell.tensor_equivalence", Family::maxwell_so3c, Family::maxwell_tensor, 1,
       "the self-dual tensor form d_nu Q^{mu nu} = 0 is equivalent to the complex Maxwell equations"},
      {"fierz_pauli.final_equivalence", Family::fierz_pauli_full, Family::fierz_pauli_final, 5,
       "the spin-2 operator reduces to the wave equation with trace and divergence constraints"},
      {"fierz_pauli.potential_equivalence", Family::fierz_pauli_full, Family::fierz_pauli_a, 5,
       "the field-tensor and potential forms of the spin-2 equation share their solutions"},
      {"fierz_pauli.gauge_equivalence", Family::fierz_pauli_full, Family::fierz_pauli_gauge, 5,
       "the spin-2 solutions satisfy the alternative gauge 4 d_nu A^{mu nu} - d^mu A = 0"},
  };
  return t;
}

inline void add_rep_checks(std::vector<CheckDescriptor>& out) {
  for (const auto& info : rep_table()) {
    const RepKind kind = info.kind;
    const std::string prefix = info.prefix;
    auto gen_shape = [kind](const Context&) {
      auto r = rep_ptr(kind);
      return std::vector<std::string>{"generators M^{ab}: 6 independent " + r->M(0, 1).shape() + " matrices",
                                      "representation dimension " + std::to_string(r->dim)};
    };

    CheckDescriptor st{"structure", prefix + ".structure", std::string("algebraic identities of the ") + info.anchor, gen_shape,
                       nullptr};
    st.run = [kind, d = st](const Context&) {
      auto r = rep_ptr(kind);
      return std::vector<Record>{make_record(d, json{{"rep", r->name}}, structure_check(*r))};
    };
    out.push_back(st);

    CheckDescriptor cov{"covariance", prefix + ".covariance", std::string("finite transformation laws of the ") + info.anchor,
                        gen_shape, nullptr};
    cov.run = [kind, d = cov](const Context&) {
      auto r = rep_ptr(kind);
      std::vector<Record> recs;
      auto els = element_fixtures();
      for (const auto& e : els) {
        GroupElement g = group_element(r, e);
        recs.push_back(make_record(d, json{{"rep", r->name}, {"element", e.label()}}, covariance_check(g)));
      }
      GroupElement prod = compose(group_element(r, els[0]), group_element(r, els[3]));
      recs.push_back(make_record(d, json{{"rep", r->name}, {"element", prod.label}}, covariance_check(prod)));
      return recs;
    };
    out.push_back(cov);

    CheckDescriptor plp{"pauli_lubanski", prefix + ".pl_properties",
                        std::string("Pauli-Lubanski vector W_mu = (1/2) e_{mu nu s t} p^nu S^{st} in the ") + info.anchor,
                        gen_shape, nullptr};
    plp.run = [kind, d = plp](const Context& c) {
      auto r = rep_ptr(kind);
      std::vector<Record> recs;
      std::vector<MomentumSample> ps = c.fixtures.massive;
      ps.insert(ps.end(), c.fixtures.massless.begin(), c.fixtures.massless.end());
      for (const auto& p : ps) {
        Report rep = pl_properties(build_pl(r, p.p()));
        std::size_t bad = 0;
        for (const auto& e : element_fixtures())
          if (!pl_covariance(group_element(r, e), p.p())) ++bad;
        rep.add("covariance", bad == 0, "D W_mu(p) D^-1 = Lambda^nu_mu W_nu(Lambda p) for " + std::to_string(6 - bad) + "/6 elements");
        recs.push_back(make_record(d, json{{"rep", r->name}, {"p", p.str()}}, rep));
      }
      return recs;
    };
    out.push_back(plp);

    CheckDescriptor spec{"spectra", prefix + ".spin_spectrum",
                         std::string("multiplicities of W^2 = c m^2 in the ") + info.anchor, gen_shape, nullptr};
    spec.run = [kind, expected = info.spectrum, d = spec](const Context& c) {
      auto r = rep_ptr(kind);
      std::vector<Record> recs;
      for (const auto& p : c.fixtures.massive) {
        SpinSpectrum s = spin_spectrum(r, p);
        json mult = json::object();
        std::map<std::string, std::size_t> got;
        for (std::size_t k = 0; k < s.eigenvalue_candidates.size(); ++k) {
          mult[rational_string(s.eigenvalue_candidates[k])] = std::to_string(s.multiplicities[k]);
          if (s.multiplicities[k]) got[rational_string(s.eigenvalue_candidates[k])] = s.multiplicities[k];
        }
        Report rep;
        rep.add("spectrum", got == expected && s.total() == r->dim,
                "nonzero multiplicities account for " + std::to_string(s.total()) + "/" + std::to_string(r->dim));
        recs.push_back(make_record(d, json{{"rep", r->name}, {"p", p.str()}, {"m2", rational_string(p.mass_squared())}}, rep,
                                   json{{"multiplicities", mult}}));
      }
      return recs;
    };
    out.push_back(spec);
  }
}

inline void add_casimir_checks(std::vector<CheckDescriptor>& out) {
  for (RepKind kind : {RepKind::dirac_bispinor, RepKind::weyl_left}) {
    std::string prefix = kind == RepKind::dirac_bispinor ? "dirac" : "weyl";
    CheckDescriptor d{"spectra", prefix + ".casimir", "W^2 = -(3/4) p^2 I for spin 1/2 at every momentum", nullptr, nullptr};
    d.shapes = [kind](const Context&) {
      return std::vector<std::string>{"W^2: " + rep_ptr(kind)->identity().shape()};
    };
    d.run = [kind, d](const Context& c) {
      auto r = rep_ptr(kind);
      std::vector<Record> recs;
      std::vector<MomentumSample> ps = c.fixtures.massive;
      ps.insert(ps.end(), c.fixtures.massless.begin(), c.fixtures.massless.end());
      ps.insert(ps.end(), c.fixtures.offshell.begin(), c.fixtures.offshell.end());
      for (const auto& p : ps) {
        Matrix w2 = casimir_w2(build_pl(r, p.p()));
        Matrix target = (Scalar::frac(-3, 4) * p.p().square()) * r->identity();
        Report rep;
        rep.add("w2_scalar", w2 == target, "|W^2 + (3/4) p^2 I|_1 = " + (w2 - target).l1_norm().get_str());
        recs.push_back(make_record(d, momentum_inputs(p), rep));
      }
      return recs;
    };
    out.push_back(d);
  }

  CheckDescriptor pl{"pauli_lubanski", "dirac.pl_identity",
                     "W_mu = (1/2)(p_mu + m gamma_mu) gamma_5 on Dirac solutions, not on the full space", nullptr, nullptr};
  pl.shapes = [](const Context&) { return std::vector<std::string>{"W_mu: 4x4", "gamma.p - m: 4x4"}; };
  pl.run = [d = pl](const Context& c) {
    std::vector<Record> recs;
    for (const auto& p : c.fixtures.massive) recs.push_back(make_record(d, momentum_inputs(p, Context::mass_of(p)), dirac_pl_identity(p)));
    return recs;
  };
  out.push_back(pl);

  CheckDescriptor mb{"covariance", "weyl.massless_blocks",
                     "the basis change U' splits the Dirac operator into Weyl blocks that decouple at m = 0", nullptr, nullptr};
  mb.shapes = [](const Context&) { return std::vector<std::string>{"U': 4x4", "blocks: 2x2"}; };
  mb.run = [d = mb](const Context&) { return std::vector<Record>{make_record(d, json::object(), massless_block_transform())}; };
  out.push_back(mb);
}

struct HelicitySpec {
  RepKind kind;
  const char* check_id;
  const char* anchor;
  std::string lambda;
};

inline void add_helicity_checks(std::vector<CheckDescriptor>& out) {
  static const std::vector<HelicitySpec> specs = {
      {RepKind::weyl_left, "weyl.helicity_scan", "W_mu phi = lambda p_mu phi has a solution only for lambda = -1/2", "-1/2"},
      {RepKind::so3c_vector, "so3c.helicity_scan", "W_mu F = lambda p_mu F has a solution for exactly one sign lambda = +-1",
       "-1"},
  };
  for (const auto& s : specs) {
    CheckDescriptor d{"helicity", s.check_id, s.anchor, nullptr, nullptr};
    RepKind kind = s.kind;
    d.shapes = [kind](const Context&) {
      auto r = rep_ptr(kind);
      return std::vector<std::string>{"helicity system per candidate: " + std::to_string(4 * r->dim) + "x" + std::to_string(r->dim)};
    };
    d.run = [kind, lambda = s.lambda, d](const Context& c) {
      auto r = rep_ptr(kind);
      std::vector<Record> recs;
      bool candidate_listed = false;
      for (const auto& l : c.helicity_candidates) candidate_listed = candidate_listed || rational_string(l) == lambda;
      for (const auto& p : c.fixtures.massless) {
        auto scan = helicity_scan(r, p, c.helicity_candidates);
        json dims = json::object();
        std::size_t nonzero = 0;
        bool expected_hit = false;
        for (const auto& e : scan) {
          dims[rational_string(e.lambda)] = std::to_string(e.kernel_dim);
          if (e.kernel_dim) ++nonzero;
          if (e.kernel_dim == 1 && rational_string(e.lambda) == lambda) expected_hit = true;
        }
        Report rep;
        rep.add("unique_helicity", candidate_listed ? (nonzero == 1 && expected_hit) : nonzero == 0,
                candidate_listed ? "only lambda = " + lambda + " gives a dim-1 kernel"
                                 : "lambda = " + lambda + " not among the candidates; no kernel expected");
        recs.push_back(make_record(d, json{{"rep", r->name}, {"p", p.str()}}, rep, json{{"kernel_dims", dims}}));
      }
      return recs;
    };
    out.push_back(d);
  }

  CheckDescriptor st{"helicity", "so3c.helicity_sign_stable", "the SO(3,C) helicity sign is the same at every null momentum",
                     nullptr, nullptr};
  st.shapes = [](const Context&) { return std::vector<std::string>{"helicity system per candidate: 12x3"}; };
  st.run = [d = st](const Context& c) {
    auto r = rep_ptr(RepKind::so3c_vector);
    std::set<std::string> signs;
    std::size_t hits = 0;
    for (const auto& p : c.fixtures.massless)
      for (const auto& e : helicity_scan(r, p, {Rational(-1), Rational(1)}))
        if (e.kernel_dim) {
          signs.insert(rational_string(e.lambda));
          ++hits;
        }
    Report rep;
    rep.add("stable_sign", signs.size() == 1 && hits == c.fixtures.massless.size(),
            signs.size() == 1 ? "lambda = " + *signs.begin() + " at all " + std::to_string(hits) + " null fixtures"
                              : std::to_string(signs.size()) + " distinct signs");
    return std::vector<Record>{make_record(d, json{{"rep", r->name}}, rep)};
  };
  out.push_back(st);
}

inline void add_system_checks(std::vector<CheckDescriptor>& out) {
  for (const auto& k : kernel_table()) {
    const Family f = k.family;
    const FamilyInfo& info = family_info(f);
    auto shapes = [f](const Context& c) {
      auto ps = fixtures_for(c, f);
      return std::vector<std::string>{shape_line(f, ps.front().p(), mass_for(f, ps.front()))};
    };
    CheckDescriptor kd{"systems", std::string(info.name) + ".kernel", info.anchor, shapes, nullptr};
    kd.run = [f, dim = k.dim, d = kd](const Context& c) {
      std::vector<Record> recs;
      for (const auto& p : fixtures_for(c, f)) {
        Rational m = mass_for(f, p);
        LinearSystem s = assemble(f, p, m);
        KernelReport kr = kernel_of(s);
        Report rep;
        rep.add("kernel_dim", kr.kernel_dim == dim, "dim " + std::to_string(kr.kernel_dim) + ", expected " + std::to_string(dim));
        recs.push_back(make_record(d, momentum_inputs(p, m), rep,
                                   json{{"shape", s.total.shape()}, {"rank", std::to_string(kr.rank)}, {"kernel_dim", std::to_string(kr.kernel_dim)}}));
      }
      return recs;
    };
    out.push_back(kd);

    CheckDescriptor dd{"systems", std::string(info.name) + ".dalembert",
                       "solutions exist only on the shell p^2 = m^2", shapes, nullptr};
    dd.run = [f, d = dd](const Context& c) {
      std::vector<Record> recs;
      Rational m = family_info(f).massless_only ? Rational(0) : c.reference_mass();
      for (const auto& p : c.fixtures.offshell) recs.push_back(make_record(d, momentum_inputs(p, m), dalembert_check(f, p.p(), m)));
      if (!family_info(f).massless_only)
        for (const auto& p : c.fixtures.massless) recs.push_back(make_record(d, momentum_inputs(p, m), dalembert_check(f, p.p(), m)));
      else
        for (const auto& p : c.fixtures.massive) recs.push_back(make_record(d, momentum_inputs(p, m), dalembert_check(f, p.p(), m)));
      return recs;
    };
    out.push_back(dd);

    CheckDescriptor ld{"systems", std::string(info.name) + ".lorentz_invariance",
                       "kernel dimensions are unchanged by the fixture Lorentz transformations", shapes, nullptr};
    ld.run = [f, d = ld](const Context& c) {
      auto ps = fixtures_for(c, f);
      const auto& p = ps.size() > 1 ? ps[1] : ps.front();
      Rational m = mass_for(f, p);
      return std::vector<Record>{make_record(d, momentum_inputs(p, m), lorentz_invariance_check(f, p.p(), m))};
    };
    out.push_back(ld);
  }

  auto massive_run = [](CheckDescriptor d, std::function<Report(const MomentumSample&, const Rational&)> f) {
    d.run = [d, f](const Context& c) {
      std::vector<Record> recs;
      for (const auto& p : c.fixtures.massive) {
        Rational m = Context::mass_of(p);
        recs.push_back(make_record(d, momentum_inputs(p, m), f(p, m)));
      }
      return recs;
    };
    return d;
  };
  auto family_shapes = [](std::vector<Family> fs) {
    return [fs](const Context& c) {
      std::vector<std::string> out;
      for (auto f : fs) {
        auto ps = fixtures_for(c, f);
        out.push_back(shape_line(f, ps.front().p(), mass_for(f, ps.front())));
      }
      return out;
    };
  };
  out.push_back(massive_run({"systems", "dirac.conjugate_consistency",
                             "the conjugate row system has as many solutions as the Sigma-form system",
                             family_shapes({Family::dirac_sigma, Family::dirac_sigma_conjugate}), nullptr},
                            [](const MomentumSample& p, const Rational& m) { return conjugate_consistency(p.p(), m); }));
  out.push_back(massive_run({"systems", "fierz_pauli.normalization",
                             "the field-tensor form of the spin-2 operator is twice the potential form",
                             family_shapes({Family::fierz_pauli_full, Family::fierz_pauli_a}), nullptr},
                            [](const MomentumSample& p, const Rational& m) { return fierz_pauli_normalization(p.p(), m); }));

  auto all_momenta = [](CheckDescriptor d, std::function<Report(const FourVector&)> f) {
    d.run = [d, f](const Context& c) {
      std::vector<Record> recs;
      for (const auto* set : {&c.fixtures.massive, &c.fixtures.massless})
        for (const auto& p : *set) recs.push_back(make_record(d, momentum_inputs(p), f(p.p())));
      return recs;
    };
    return d;
  };
  auto tensor_shapes = [](const Context&) { return std::vector<std::string>{"Q^{mu nu}: 4x4", "Q^{mu nu a}: 4 x (4x4)"}; };
  out.push_back(all_momenta({"systems", "tensor.self_duality", "2i Q = e Q for the potential-built second- and third-rank tensors",
                             tensor_shapes, nullptr},
                            [](const FourVector& p) { return self_duality_check(p); }));
  out.push_back(all_momenta({"systems", "fierz_pauli.cyclic_identity", "F^{abc} + F^{bca} + F^{cab} = 0 for symmetric A",
                             tensor_shapes, nullptr},
                            [](const FourVector& p) { return cyclic_identity_check(p); }));

  CheckDescriptor mp{"systems", "maxwell.proca_tensor", "the self-dual tensor of massless potentials obeys d_nu Q^{mu nu} = 0",
                     family_shapes({Family::proca}), nullptr};
  mp.run = [d = mp](const Context& c) {
    std::vector<Record> recs;
    for (const auto& p : c.fixtures.massless) recs.push_back(make_record(d, momentum_inputs(p), maxwell_proca_tensor_check(p)));
    return recs;
  };
  out.push_back(mp);
}

inline void add_equivalence_checks(std::vector<CheckDescriptor>& out) {
  for (const auto& e : equivalence_table()) {
    CheckDescriptor d{"equivalences", e.check_id, e.anchor, nullptr, nullptr};
    Family a = e.a, b = e.b;
    d.shapes = [a, b](const Context& c) {
      auto ps = fixtures_for(c, a);
      Rational m = mass_for(a, ps.front());
      std::vector<std::string> out{shape_line(a, ps.front().p(), m), shape_line(b, ps.front().p(), m)};
      out.push_back("isomorphism: " + default_isomorphism(a, b).shape());
      return out;
    };
    d.run = [a, b, dim = e.dim, d](const Context& c) {
      std::vector<Record> recs;
      for (const auto& p : fixtures_for(c, a)) {
        Rational m = mass_for(a, p);
        EquivalenceResult r = equivalence(a, b, p.p(), m, default_isomorphism(a, b));
        Report rep;
        rep.add("equal_kernels", r.verdict == SubspaceRelation::equal, to_string(r.verdict));
        rep.add("dims", r.dims.first == dim && r.dims.second == dim,
                "(" + std::to_string(r.dims.first) + "," + std::to_string(r.dims.second) + "), expected " + std::to_string(dim));
        recs.push_back(make_record(d, momentum_inputs(p, m), rep, json{{"verdict", to_string(r.verdict)}}));
      }
      return recs;
    };
    out.push_back(d);
  }

  CheckDescriptor mt{"equivalences", "maxwell.massive_trivial", "the Maxwell forms admit no solutions at massive momenta", nullptr,
                     nullptr};
  mt.shapes = [](const Context& c) {
    std::vector<std::string> out;
    for (auto f : {Family::maxwell_so3c, Family::maxwell_curl_div, Family::maxwell_spinor, Family::maxwell_laport,
                   Family::maxwell_quaternion, Family::maxwell_tensor})
      out.push_back(shape_line(f, c.fixtures.massive.front().p(), 0));
    return out;
  };
  mt.run = [d = mt](const Context& c) {
    std::vector<Record> recs;
    for (const auto& p : c.fixtures.massive) {
      Report rep;
      for (auto f : {Family::maxwell_so3c, Family::maxwell_curl_div, Family::maxwell_spinor, Family::maxwell_laport,
                     Family::maxwell_quaternion, Family::maxwell_tensor}) {
        std::size_t dim = kernel_of(assemble(f, p, Rational(0))).kernel_dim;
        rep.add(to_string(f), dim == 0, "kernel dim " + std::to_string(dim));
      }
      recs.push_back(make_record(d, momentum_inputs(p), rep));
    }
    return recs;
  };
  out.push_back(mt);
}

inline void add_gauge_checks(std::vector<CheckDescriptor>& out) {
  for (Family f : {Family::proca, Family::fierz_pauli_final, Family::fierz_pauli_full}) {
    CheckDescriptor d{"gauge", std::string(family_info(f).name) + ".constraints",
                      f == Family::proca ? "massive vector solutions are transverse, p.A = 0"
                                         : "massive spin-2 solutions are traceless and divergence-free",
                      nullptr, nullptr};
    d.shapes = [f](const Context& c) {
      return std::vector<std::string>{shape_line(f, c.fixtures.massive.front().p(), Context::mass_of(c.fixtures.massive.front()))};
    };
    d.run = [f, d](const Context& c) {
      std::vector<Record> recs;
      for (const auto& p : c.fixtures.massive) {
        Rational m = Context::mass_of(p);
        recs.push_back(make_record(d, momentum_inputs(p, m), constraint_check(f, p.p(), m)));
      }
      return recs;
    };
    out.push_back(d);
  }

  CheckDescriptor pc{"gauge", "proca.constraint_equivalence", "the Proca solutions are exactly those of {(p^2 - m^2) A, p.A}",
                     nullptr, nullptr};
  pc.shapes = [](const Context& c) {
    return std::vector<std::string>{shape_line(Family::proca, c.fixtures.massive.front().p(), Context::mass_of(c.fixtures.massive.front())),
                                    "constraints: 5x4"};
  };
  pc.run = [d = pc](const Context& c) {
    std::vector<Record> recs;
    for (const auto& p : c.fixtures.massive) {
      Rational m = Context::mass_of(p);
      recs.push_back(make_record(d, momentum_inputs(p, m), proca_constraint_equivalence(p.p(), m)));
    }
    return recs;
  };
  out.push_back(pc);

  for (auto [kind, id, anchor] : {std::tuple{GaugeKind::proca_massless, "proca.massless_gauge",
                                             "A -> A + d f leaves the massless field strength unchanged"},
                                  std::tuple{GaugeKind::fierz_pauli_massless, "fierz_pauli.massless_gauge",
                                             "A -> A + d f + f d is a symmetry of the massless spin-2 operator when f solves Maxwell"}}) {
    CheckDescriptor d{"gauge", id, anchor, nullptr, nullptr};
    d.shapes = [kind = kind](const Context& c) {
      Family f = kind == GaugeKind::proca_massless ? Family::proca : Family::fierz_pauli_full;
      return std::vector<std::string>{shape_line(f, c.fixtures.massless.front().p(), 0)};
    };
    d.run = [kind = kind, d](const Context& c) {
      std::vector<Record> recs;
      for (const auto& p : c.fixtures.massless) recs.push_back(make_record(d, momentum_inputs(p), gauge_check(kind, p)));
      return recs;
    };
    out.push_back(d);
  }
}

inline void add_einstein_checks(std::vector<CheckDescriptor>& out) {
  CheckDescriptor d{"einstein", "einstein.fierz_pauli_comparison",
                    "linearized Einstein equations versus the massless spin-2 equations and their gauge conditions", nullptr,
                    nullptr};
  d.shapes = [](const Context& c) {
    FourVector p = c.fixtures.massless.front().p();
    return std::vector<std::string>{shape_line(Family::einstein_linear, p, 0), shape_line(Family::einstein_gauge, p, 0),
                                    shape_line(Family::fierz_pauli_a, p, 0), shape_line(Family::fierz_pauli_gauge, p, 0)};
  };
  d.run = [d](const Context& c) {
    std::vector<Record> recs;
    for (const auto& p : c.fixtures.massless) {
      EinsteinComparison ec = einstein_vs_fierz_pauli(p);
      recs.push_back(make_record(d, momentum_inputs(p), ec.report,
                                 json{{"difference_l1", rational_string(ec.difference_norm)},
                                      {"einstein_gauge_kernel_dim", std::to_string(ec.einstein_gauge_dim)},
                                      {"fierz_pauli_gauge_kernel_dim", std::to_string(ec.fierz_pauli_gauge_dim)},
                                      {"traceless_kernel_dim", std::to_string(ec.reduced_dim)}}));
    }
    return recs;
  };
  out.push_back(d);

  CheckDescriptor o{"einstein", "einstein.offshell_gauge_kernel",
                    "off the light cone the linearized Einstein kernel consists of gauge directions only", nullptr, nullptr};
  o.shapes = [](const Context& c) {
    return std::vector<std::string>{shape_line(Family::einstein_linear, c.fixtures.offshell.front().p(), 0)};
  };
  o.run = [o](const Context& c) {
    std::vector<Record> recs;
    for (const auto& p : c.fixtures.offshell) recs.push_back(make_record(o, momentum_inputs(p), einstein_offshell_kernel(p.p())));
    return recs;
  };
  out.push_back(o);
}

inline void add_identity_checks(std::vector<CheckDescriptor>& out) {
  auto dirac_shapes = [](const Context&) { return std::vector<std::string>{"bilinears u-bar X v with X: 4x4"}; };
  auto pair_inputs = [](const MomentumSample& p, const MomentumSample& q, const Rational& m) {
    return json{{"p", p.str()}, {"q", q.str()}, {"m", rational_string(m)}};
  };
  auto pair_check = [&](const char* id, const char* anchor, std::function<Report(const SolutionPair&)> f) {
    CheckDescriptor d{"identities", id, anchor, dirac_shapes, nullptr};
    d.run = [d, f, pair_inputs](const Context& c) {
      std::vector<Record> recs;
      for (const auto& [p, q] : shell_pairs(c.fixtures.massive)) {
        Rational m = Context::mass_of(p);
        recs.push_back(make_record(d, pair_inputs(p, q, m), f(make_pair(Family::dirac_gamma, p, q, m))));
      }
      return recs;
    };
    out.push_back(d);
  };
  pair_check("dirac.current_conservation", "d_mu (psi-bar gamma^mu psi) = 0 on pairs of solutions",
             [](const SolutionPair& s) { return current_conservation(s); });
  pair_check("dirac.energy_momentum", "balance relations, energy-momentum traces and T^00 = psi^dagger H psi on solution pairs",
             [](const SolutionPair& s) { return energy_momentum_identities(s); });

  CheckDescriptor mi{"identities", "dirac.multi_index_balance",
                     "d_mu[(D^a psi-bar) gamma^mu (D^b psi)] = 0 with a = (0,1,0,0), b = (1,0,0,0)", dirac_shapes, nullptr};
  mi.run = [d = mi, pair_inputs](const Context& c) {
    auto pairs = shell_pairs(c.fixtures.massive);
    const auto& [p, q] = pairs.size() > 1 ? pairs[1] : pairs[0];
    Rational m = Context::mass_of(p);
    json in = pair_inputs(p, q, m);
    in["a"] = "(0,1,0,0)";
    in["b"] = "(1,0,0,0)";
    return std::vector<Record>{make_record(d, in, multi_index_balance(make_pair(Family::dirac_gamma, p, q, m), {0, 1, 0, 0}, {1, 0, 0, 0}))};
  };
  out.push_back(mi);

  CheckDescriptor g5{"identities", "dirac.gamma5_identities",
                     "gamma^5 as a quadruple product and the triple-product identities with gamma_5", dirac_shapes, nullptr};
  g5.run = [d = g5](const Context& c) {
    std::vector<Record> recs;
    for (const auto& p : c.fixtures.massive) {
      Rational m = Context::mass_of(p);
      recs.push_back(make_record(d, momentum_inputs(p, m), gamma5_trace_identity(p.p(), m)));
    }
    return recs;
  };
  out.push_back(g5);

  CheckDescriptor sd{"identities", "fierz_pauli.selfdual_balance",
                     "the self-dual energy-momentum balance for the third-rank tensor and its Maxwell analogue", nullptr, nullptr};
  sd.shapes = [](const Context&) { return std::vector<std::string>{"Q^{mu nu a}: 4 x (4x4)", "divergence rows: 4x10"}; };
  sd.run = [d = sd](const Context& c) {
    std::vector<Record> recs;
    for (const auto& [p, q] : shell_pairs(c.fixtures.massless))
      recs.push_back(make_record(d, json{{"p", p.str()}, {"q", q.str()}}, selfdual_balance(p, q)));
    return recs;
  };
  out.push_back(sd);

  CheckDescriptor nc{"identities", "identities.negative_controls",
                     "mass mismatches, off-shell spinors and non-solution tensors leave nonzero residuals", dirac_shapes, nullptr};
  nc.run = [d = nc](const Context& c) {
    const auto& f = c.fixtures.massive;
    const auto& p = f.size() > 1 ? f[1] : f[0];
    const auto& q = f.size() > 2 ? f[2] : f[0];
    Rational m = Context::mass_of(p);
    Rational other_m = m + 1;
    MomentumSample other = massive_fixtures(other_m * other_m)[1];
    const auto& n = c.fixtures.massless;
    Report r = identity_negative_controls(p, q, m, other, other_m, n.front(), n.size() > 1 ? n[1] : n.front());
    return std::vector<Record>{make_record(d, json{{"p", p.str()}, {"q", q.str()}, {"m", rational_string(m)},
                                                   {"q_other", other.str()}, {"m_other", rational_string(other_m)}},
                                           r)};
  };
  out.push_back(nc);
}

} // namespace detail

inline const std::vector<CheckDescriptor>& registry() {
  static const std::vector<CheckDescriptor> table = [] {
    std::vector<CheckDescriptor> out;
    detail::add_rep_checks(out);
    detail::add_casimir_checks(out);
    detail::add_helicity_checks(out);
    detail::add_system_checks(out);
    detail::add_equivalence_checks(out);
    detail::add_gauge_checks(out);
    detail::add_einstein_checks(out);
    detail::add_identity_checks(out);
    return out;
  }();
  return table;
}

inline const CheckDescriptor* find_check(const std::string& id) {
  for (const auto& d : registry())
    if (d.check_id == id) return &d;
  return nullptr;
}

} // namespace lubanski::cli
