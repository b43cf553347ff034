#include "hetperc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hetperc/matrices.hpp"

namespace hetperc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

BoundRecord make_record(std::string id, std::string formula) {
  BoundRecord r;
  r.id = std::move(id);
  r.formula = std::move(formula);
  return r;
}

BoundRecord inapplicable(BoundRecord r, std::string reason) {
  r.applicable = false;
  r.reason = std::move(reason);
  return r;
}

// First failed requirement on a Perron result whose vectors the bound uses.
std::optional<std::string> perron_problem(const PerronResult& pr, const char* matrix,
                                          bool need_vectors) {
  if (!pr.converged) return std::string("power iteration for ") + matrix + " did not converge";
  if (need_vectors && !pr.irreducible) {
    return std::string(matrix) + " is reducible, so its Perron vector is not strictly positive";
  }
  if (pr.rho_upper >= 1.0) return std::string("rho(") + matrix + ") >= 1: supercritical for this bound";
  return std::nullopt;
}

double vector_max(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

std::vector<BoundRecord> chi_from_vectors(const Digraph& d, const SiteProbabilities& p,
                                          const AnalysisContext& ctx) {
  const PerronResult& pr = ctx.perron_a;
  const std::size_t n = d.vertex_count();
  std::vector<BoundRecord> out;
  for (int side = 0; side < 2; ++side) {
    const bool is_out = side == 0;
    BoundRecord r = is_out
        ? make_record("chi_out_adjacency",
                      "chi_out(v) <= sqrt(p_v) xi_R(v) / min_i xi_R(i) / (1 - rho(A_p)) <= "
                      "gamma_R / (1 - rho(A_p))")
        : make_record("chi_in_adjacency",
                      "chi_in(v) <= sqrt(p_v) xi_L(v) / min_i xi_L(i) / (1 - rho(A_p)) <= "
                      "gamma_L / (1 - rho(A_p))");
    r.inputs.emplace_back("rho_A", pr.rho_upper);
    const HeightRatio& gamma = is_out ? pr.gamma_R : pr.gamma_L;
    r.inputs.emplace_back(is_out ? "gamma_R" : "gamma_L", gamma.value);
    if (!ctx.digraph_strongly_connected) {
      out.push_back(inapplicable(std::move(r), "digraph is not strongly connected"));
      continue;
    }
    if (auto problem = perron_problem(pr, "A_p", true)) {
      out.push_back(inapplicable(std::move(r), *problem));
      continue;
    }
    if (gamma.zero_support) {
      out.push_back(inapplicable(std::move(r), "height ratio is infinite"));
      continue;
    }
    const std::vector<double>& xi = is_out ? pr.right_vec : pr.left_vec;
    const double xi_min = *std::min_element(xi.begin(), xi.end());
    const double denom = 1.0 - pr.rho_upper;
    r.applicable = true;
    r.value = gamma.value / denom;
    r.per_vertex.resize(n);
    for (VertexId v = 0; v < n; ++v) r.per_vertex[v] = std::sqrt(p[v]) * xi[v] / xi_min / denom;
    r.vacuous = *r.value > static_cast<double>(n);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

double BoundRecord::input(const std::string& name) const {
  for (const auto& [key, v] : inputs) {
    if (key == name) return v;
  }
  throw std::out_of_range("bound record '" + id + "' has no input '" + name + "'");
}

const BoundRecord* BoundReport::find(const std::string& id) const {
  for (const BoundRecord& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

AnalysisContext make_context(const Digraph& d, const SiteProbabilities& p,
                             const SpectralOptions& spectral, std::size_t depth_cap) {
  require_matching_size(d, p);
  AnalysisContext ctx;
  ctx.spectral = spectral;
  ctx.depth_cap = depth_cap;
  ctx.adjacency_p = weighted_adjacency(d, p);
  ctx.hashimoto_p = weighted_hashimoto(d, p);
  ctx.perron_a = spectral_radius(ctx.adjacency_p, spectral);
  ctx.perron_h = spectral_radius(ctx.hashimoto_p, spectral);
  ctx.digraph_strongly_connected = is_strongly_connected(d);
  ctx.olg_strongly_connected = olg_strongly_connected(d);
  ctx.undirected = d.is_symmetric();
  return ctx;
}

std::vector<BoundRecord> bound_chi_out_adjacency(const Digraph& d, const SiteProbabilities& p,
                                                 const AnalysisContext& ctx) {
  return chi_from_vectors(d, p, ctx);
}

std::vector<BoundRecord> bound_chi_out_hashimoto(const Digraph& d, const SiteProbabilities& p,
                                                 const AnalysisContext& ctx) {
  require_matching_size(d, p);
  const PerronResult& pr = ctx.perron_h;
  const std::size_t n = d.vertex_count();
  std::vector<BoundRecord> out;
  for (int side = 0; side < 2; ++side) {
    const bool is_out = side == 0;
    BoundRecord r = is_out
        ? make_record("chi_out_hashimoto", "chi_out(v) <= 1 + od(v) gamma_R(H_p) / (1 - rho(H_p))")
        : make_record("chi_in_hashimoto", "chi_in(v) <= 1 + id(v) gamma_L(H_p) / (1 - rho(H_p))");
    const HeightRatio& gamma = is_out ? pr.gamma_R : pr.gamma_L;
    r.inputs.emplace_back("rho_H", pr.rho_upper);
    r.inputs.emplace_back(is_out ? "gamma_R" : "gamma_L", gamma.value);
    if (!ctx.digraph_strongly_connected) {
      out.push_back(inapplicable(std::move(r), "digraph is not strongly connected"));
      continue;
    }
    if (!ctx.olg_strongly_connected) {
      out.push_back(inapplicable(std::move(r), "oriented line graph is not strongly connected"));
      continue;
    }
    if (auto problem = perron_problem(pr, "H_p", true)) {
      out.push_back(inapplicable(std::move(r), *problem));
      continue;
    }
    if (gamma.zero_support) {
      out.push_back(inapplicable(std::move(r), "height ratio is infinite"));
      continue;
    }
    const double factor = gamma.value / (1.0 - pr.rho_upper);
    r.applicable = true;
    r.per_vertex.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      const double deg = static_cast<double>(is_out ? d.out_degree(v) : d.in_degree(v));
      r.per_vertex[v] = 1.0 + deg * factor;
    }
    r.value = vector_max(r.per_vertex);
    r.vacuous = *r.value > static_cast<double>(n);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BoundRecord> bound_connectivity(const Digraph& d, const SiteProbabilities& p,
                                            const AnalysisContext& ctx,
                                            const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                            const ReturnProbability& rp) {
  require_matching_size(d, p);
  const std::size_t n = d.vertex_count();
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) throw GraphError("connectivity pair vertex out of range");
  }

  std::map<VertexId, std::vector<std::size_t>> dist_cache;
  auto distance = [&](VertexId from, VertexId to) -> std::optional<std::size_t> {
    auto it = dist_cache.find(from);
    if (it == dist_cache.end()) it = dist_cache.emplace(from, distances_from(d, from)).first;
    const std::size_t dd = it->second[to];
    if (dd == kUnreachable) return std::nullopt;
    return dd;
  };
  auto pair_bound = [&](VertexId from, VertexId to, auto&& formula) {
    PairBound b;
    b.from = from;
    b.to = to;
    b.distance = distance(from, to);
    if (!b.distance) {
      b.unreachable = true;
      b.value = 0.0;
    } else {
      b.value = formula(*b.distance);
      b.vacuous = b.value > 1.0;
    }
    return b;
  };
  auto finish = [](BoundRecord& r) {
    r.applicable = true;
    double mx = 0.0;
    for (const PairBound& b : r.pairs) {
      mx = std::max(mx, b.value);
      r.vacuous = r.vacuous || b.vacuous;
    }
    r.value = mx;
  };

  std::vector<BoundRecord> out;
  const PerronResult& pa = ctx.perron_a;
  const double rho_a = pa.rho_upper;

  // Adjacency forms, per direction and "either direction".
  {
    BoundRecord per = make_record("tau_adjacency_pair",
                                  "tau(u,v) <= xi_R(u) / xi_R(v) * rho(A_p)^d(u,v) / (1 - rho(A_p))");
    BoundRecord either = make_record(
        "tau_adjacency_either",
        "tau(u,v) or tau(v,u) <= rho(A_p)^d / (1 - rho(A_p)), direction with the smaller xi_R ratio");
    per.inputs.emplace_back("rho_A", rho_a);
    either.inputs.emplace_back("rho_A", rho_a);
    if (auto problem = perron_problem(pa, "A_p", true)) {
      out.push_back(inapplicable(std::move(per), *problem));
      out.push_back(inapplicable(std::move(either), *problem));
    } else {
      const std::vector<double>& xi = pa.right_vec;
      for (const auto& [u, v] : pairs) {
        for (const auto& [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
          per.pairs.push_back(pair_bound(a, b, [&, a = a, b = b](std::size_t dd) {
            return xi[a] / xi[b] * std::pow(rho_a, static_cast<double>(dd)) / (1.0 - rho_a);
          }));
        }
        const VertexId from = xi[u] <= xi[v] ? u : v;
        const VertexId to = from == u ? v : u;
        either.pairs.push_back(pair_bound(from, to, [&](std::size_t dd) {
          return std::pow(rho_a, static_cast<double>(dd)) / (1.0 - rho_a);
        }));
      }
      finish(per);
      finish(either);
      out.push_back(std::move(per));
      out.push_back(std::move(either));
    }
  }

  // Hashimoto "either direction" form and its undirected counterpart.
  const PerronResult& ph = ctx.perron_h;
  const double rho_h = ph.rho_upper;
  std::optional<std::string> h_problem;
  if (!ctx.digraph_strongly_connected) {
    h_problem = "digraph is not strongly connected";
  } else if (!ctx.olg_strongly_connected) {
    h_problem = "oriented line graph is not strongly connected";
  } else if (auto problem = perron_problem(ph, "H_p", true)) {
    h_problem = problem;
  } else if (!(ph.rho_lower > 0.0)) {
    h_problem = "rho(H_p) = 0";
  } else if (!rp.applicable) {
    h_problem = "minimal return probability unavailable: " + rp.reason;
  } else if (!(rp.p_min > 0.0)) {
    h_problem = "minimal return probability is zero";
  }
  auto hashimoto_value = [&](std::size_t dd) {
    return std::pow(rho_h, static_cast<double>(dd) - 1.0) / (1.0 - rho_h) * (2.0 / rp.p_min);
  };
  {
    BoundRecord either = make_record(
        "tau_hashimoto_either",
        "tau(i,j) or tau(j,i) <= rho(H_p)^(d-1) / (1 - rho(H_p)) * 2 / P_min, direction with x_i <= x_j");
    either.inputs.emplace_back("rho_H", rho_h);
    either.inputs.emplace_back("P_min", rp.p_min);
    if (h_problem) {
      out.push_back(inapplicable(std::move(either), *h_problem));
    } else {
      // x_i = sum of eta over arcs leaving i.
      std::vector<double> x(n, 0.0);
      for (ArcId a = 0; a < d.arc_count(); ++a) x[d.arc(a).tail] += ph.right_vec[a];
      for (const auto& [u, v] : pairs) {
        const VertexId from = x[u] <= x[v] ? u : v;
        const VertexId to = from == u ? v : u;
        either.pairs.push_back(pair_bound(from, to, hashimoto_value));
      }
      finish(either);
      out.push_back(std::move(either));
    }
  }

  if (ctx.undirected) {
    BoundRecord und_a =
        make_record("tau_undirected_adjacency", "tau(u,v) <= rho(A_p)^d(u,v) / (1 - rho(A_p))");
    und_a.inputs.emplace_back("rho_A", rho_a);
    if (auto problem = perron_problem(pa, "A_p", false)) {
      out.push_back(inapplicable(std::move(und_a), *problem));
    } else {
      for (const auto& [u, v] : pairs) {
        und_a.pairs.push_back(pair_bound(u, v, [&](std::size_t dd) {
          return std::pow(rho_a, static_cast<double>(dd)) / (1.0 - rho_a);
        }));
      }
      finish(und_a);
      out.push_back(std::move(und_a));
    }

    BoundRecord und_h = make_record("tau_undirected_hashimoto",
                                    "tau(u,v) <= rho(H_p)^(d(u,v)-1) / (1 - rho(H_p)) * 2 / P_min");
    und_h.inputs.emplace_back("rho_H", rho_h);
    und_h.inputs.emplace_back("P_min", rp.p_min);
    if (h_problem) {
      out.push_back(inapplicable(std::move(und_h), *h_problem));
    } else {
      for (const auto& [u, v] : pairs) und_h.pairs.push_back(pair_bound(u, v, hashimoto_value));
      finish(und_h);
      out.push_back(std::move(und_h));
    }
  }
  return out;
}

std::vector<BoundRecord> bound_chi_norm1(const Digraph& d, const SiteProbabilities& p,
                                         const AnalysisContext& ctx) {
  require_matching_size(d, p);
  const std::size_t n = d.vertex_count();
  std::vector<BoundRecord> out;
  const double norm1 = induced_norm(ctx.hashimoto_p, NormKind::one);
  const double norminf = induced_norm(ctx.hashimoto_p, NormKind::inf);

  for (int side = 0; side < 2; ++side) {
    const bool is_in = side == 0;
    const double norm = is_in ? norm1 : norminf;
    BoundRecord r = is_in
        ? make_record("chi_in_norm1", "chi_in(j) <= 1 + id(j) / (1 - ||H_p||_1)")
        : make_record("chi_out_norminf", "chi_out(j) <= 1 + od(j) / (1 - ||H_p||_inf)");
    r.inputs.emplace_back(is_in ? "norm1_H" : "norminf_H", norm);
    if (norm >= 1.0) {
      out.push_back(inapplicable(std::move(r), is_in ? "||H_p||_1 >= 1" : "||H_p||_inf >= 1"));
      continue;
    }
    r.applicable = true;
    r.per_vertex.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      const double deg = static_cast<double>(is_in ? d.in_degree(v) : d.out_degree(v));
      r.per_vertex[v] = 1.0 + deg / (1.0 - norm);
    }
    r.value = vector_max(r.per_vertex);
    r.vacuous = *r.value > static_cast<double>(n);
    out.push_back(std::move(r));
  }

  // Homogeneous-percolation threshold certificates from the unweighted H.
  BoundRecord cert = make_record(
      "threshold_certificates",
      "p_c(in) >= 1/||H||_1, p_c(out) >= 1/||H||_inf, p_T >= 1/rho(H), undirected p_c >= 1/(d_max - 1)");
  const SparseNonNegMatrix h = hashimoto_matrix(d);
  const double h1 = induced_norm(h, NormKind::one);
  const double hinf = induced_norm(h, NormKind::inf);
  SpectralOptions opts = ctx.spectral;
  opts.compute_left = false;
  const PerronResult ph = spectral_radius(h, opts);
  cert.inputs.emplace_back("inv_norm1_H", h1 > 0.0 ? 1.0 / h1 : kInf);
  cert.inputs.emplace_back("inv_norminf_H", hinf > 0.0 ? 1.0 / hinf : kInf);
  cert.inputs.emplace_back("inv_rho_H", ph.rho_upper > 0.0 ? 1.0 / ph.rho_upper : kInf);
  if (ctx.undirected) {
    const double dmax = static_cast<double>(d.max_out_degree());
    cert.inputs.emplace_back("inv_dmax_minus_1", dmax > 1.0 ? 1.0 / (dmax - 1.0) : kInf);
  }
  cert.applicable = ph.converged;
  if (!ph.converged) cert.reason = "power iteration for H did not converge";
  out.push_back(std::move(cert));
  return out;
}

std::vector<BoundRecord> bound_chi_qnorm(const Digraph& d, const SiteProbabilities& p,
                                         const AnalysisContext& ctx, NormKind q) {
  require_matching_size(d, p);
  const double n = static_cast<double>(d.vertex_count());
  std::vector<BoundRecord> out;
  const char* suffix = q == NormKind::one ? "1" : (q == NormKind::two ? "2" : "inf");
  BoundRecord r = q == NormKind::inf
      ? make_record("chi_out_qnorm_inf", "max_v chi_out(v) <= 1 / (1 - ||A_p||_inf)")
      : make_record(std::string("chi_out_qnorm_") + suffix,
                    std::string("mean_v chi_out(v)^q <= (1 - ||A_p||_q)^(-q), q = ") + suffix);
  double norm = 0.0;
  try {
    norm = induced_norm(ctx.adjacency_p, q, ctx.spectral);
  } catch (const NumericalError& e) {
    out.push_back(inapplicable(std::move(r), e.what()));
    return out;
  }
  r.inputs.emplace_back(std::string("norm") + suffix + "_A", norm);
  if (norm >= 1.0) {
    out.push_back(inapplicable(std::move(r), std::string("||A_p||_") + suffix + " >= 1"));
  } else {
    const double power = q == NormKind::one ? 1.0 : (q == NormKind::two ? 2.0 : 1.0);
    r.applicable = true;
    r.value = std::pow(1.0 - norm, -power);
    r.vacuous = *r.value > std::pow(n, power);
    out.push_back(std::move(r));
  }

  if (q == NormKind::two && ctx.undirected) {
    BoundRecord c = make_record("chi_undirected_sqrt_n", "chi(i) <= sqrt(n) / (1 - rho(A_p))");
    c.inputs.emplace_back("rho_A", ctx.perron_a.rho_upper);
    if (auto problem = perron_problem(ctx.perron_a, "A_p", false)) {
      out.push_back(inapplicable(std::move(c), *problem));
    } else {
      c.applicable = true;
      c.value = std::sqrt(n) / (1.0 - ctx.perron_a.rho_upper);
      c.vacuous = *c.value > n;
      out.push_back(std::move(c));
    }
  }
  return out;
}

BoundRecord bound_sac(const Digraph& d, const SiteProbabilities& p, const AnalysisContext& ctx) {
  require_matching_size(d, p);
  BoundRecord r = make_record("sac", "chi_SAC(a) <= 1 / (1 - rho(H_p)) for every arc a");
  r.inputs.emplace_back("rho_H", ctx.perron_h.rho_upper);
  if (auto problem = perron_problem(ctx.perron_h, "H_p", false)) {
    return inapplicable(std::move(r), *problem);
  }
  r.applicable = true;
  r.value = 1.0 / (1.0 - ctx.perron_h.rho_upper);
  return r;
}

UniquenessReport uniqueness_report(const Digraph& d, const SiteProbabilities& p,
                                   const AnalysisContext& ctx,
                                   std::optional<double> largest_cluster_fraction,
                                   double large_cluster_threshold) {
  UniquenessReport u;
  const BoundRecord sac = bound_sac(d, p, ctx);
  u.rho_h = ctx.perron_h.rho;
  u.sac_bounded = sac.applicable;
  u.sac_bound = sac.applicable ? *sac.value : kInf;
  u.largest_cluster_fraction = largest_cluster_fraction;
  u.large_cluster_threshold = large_cluster_threshold;
  if (!u.sac_bounded) {
    u.regime = "sac-unbounded: no statement about uniqueness";
    return u;
  }
  if (!largest_cluster_fraction) {
    u.flagged_non_unique = true;
    u.regime = "sac-bounded: any percolating cluster in this regime is not unique";
  } else if (*largest_cluster_fraction >= large_cluster_threshold) {
    u.flagged_non_unique = true;
    u.regime = "large clusters with bounded SAC susceptibility: below the uniqueness transition";
  } else {
    u.regime = "sac-bounded, no large clusters observed";
  }
  return u;
}

std::vector<std::pair<VertexId, VertexId>> default_pairs(const Digraph& d, std::size_t max_pairs) {
  const std::size_t n = d.vertex_count();
  std::vector<std::pair<VertexId, VertexId>> pairs;
  const std::size_t sources = std::min<std::size_t>(n, 4);
  for (std::size_t k = 0; k < sources && pairs.size() < max_pairs; ++k) {
    const auto s = static_cast<VertexId>(k * n / sources);
    const std::vector<std::size_t> dist = distances_from(d, s);
    std::map<std::size_t, VertexId> first_at;
    for (VertexId v = 0; v < n; ++v) {
      if (v != s) first_at.emplace(dist[v], v);  // keeps lowest index
    }
    for (const auto& [dd, v] : first_at) {
      if (pairs.size() >= max_pairs) break;
      pairs.emplace_back(s, v);
    }
  }
  return pairs;
}

BoundReport analyze(const Digraph& d, const SiteProbabilities& p,
                    const std::vector<std::pair<VertexId, VertexId>>& pairs,
                    const SpectralOptions& spectral, std::size_t depth_cap) {
  BoundReport report;
  report.vertex_count = d.vertex_count();
  report.arc_count = d.arc_count();
  report.strictly_interior = p.strictly_interior();
  report.context = make_context(d, p, spectral, depth_cap);
  const AnalysisContext& ctx = report.context;
  report.olg = olg_connectivity_report(d);
  report.return_probability =
      minimal_return_probability(d, p, ctx.hashimoto_p, ctx.perron_h.rho_upper, depth_cap);

  auto append = [&](std::vector<BoundRecord> rs) {
    for (BoundRecord& r : rs) report.records.push_back(std::move(r));
  };
  append(bound_chi_out_adjacency(d, p, ctx));
  append(bound_chi_out_hashimoto(d, p, ctx));
  append(bound_connectivity(d, p, ctx, pairs, report.return_probability));
  append(bound_chi_norm1(d, p, ctx));
  append(bound_chi_qnorm(d, p, ctx, NormKind::one));
  append(bound_chi_qnorm(d, p, ctx, NormKind::two));
  append(bound_chi_qnorm(d, p, ctx, NormKind::inf));
  report.records.push_back(bound_sac(d, p, ctx));
  report.uniqueness = uniqueness_report(d, p, ctx);
  return report;
}

}  // namespace hetperc
