#include "cyclecover/census.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cyclecover/bijections.hpp"
#include "cyclecover/enumerate.hpp"
#include "cyclecover/errors.hpp"
#include "cyclecover/io.hpp"
#include "cyclecover/setmap.hpp"
#include "cyclecover/symfunc.hpp"

namespace cyclecover {

namespace {

using Clock = std::chrono::steady_clock;

Int parity_sign(int k) { return (k % 2) ? Int(-1) : Int(1); }

std::string digraph_line(const Digraph& d) { return one_line(format_digraph(d)); }
std::string graph_line(const Graph& g) { return one_line(format_graph(g)); }
std::string poset_line(const Poset& p) { return one_line(format_poset(p)); }

void fail(CensusReport& r, const std::string& instance, const std::string& message) {
  r.failures.push_back(instance + " | " + message);
}

// Runs one instance check, converting any exception into a failure line so a
// census survives a broken instance and reports it instead of aborting.
template <typename Check>
void checked(CensusReport& r, const std::string& instance, Check&& check) {
  ++r.instances;
  try {
    check();
  } catch (const std::exception& e) {
    fail(r, instance, std::string("exception: ") + e.what());
  }
}

struct LevelPlan {
  int exhaustive_cap = 4;  // exhaustive for n <= cap
  int samples_per_n = 200;  // beyond the cap
};

template <typename Instance, typename All, typename Sample, typename Check>
void level_census(CensusReport& r, int nmax, const LevelPlan& plan, std::mt19937_64& rng,
                  All&& all, Sample&& sample, Check&& check,
                  std::string (*line)(const Instance&)) {
  for (int n = 1; n <= nmax; ++n) {
    if (n <= plan.exhaustive_cap) {
      for (const Instance& x : all(n)) checked(r, line(x), [&] { check(x); });
    } else {
      r.sampled = true;
      for (int k = 0; k < plan.samples_per_n; ++k) {
        Instance x = sample(n, rng);
        checked(r, line(x), [&] { check(x); });
      }
    }
  }
}

template <typename Check>
void digraph_census(CensusReport& r, int nmax, const LevelPlan& plan, std::mt19937_64& rng,
                    Check&& check) {
  level_census<Digraph>(r, nmax, plan, rng, all_digraphs, random_digraph, check, digraph_line);
}

template <typename Check>
void acyclic_census(CensusReport& r, int nmax, const LevelPlan& plan, std::mt19937_64& rng,
                    Check&& check) {
  level_census<Digraph>(r, nmax, plan, rng, all_acyclic_digraphs, random_acyclic_digraph, check,
                        digraph_line);
}

template <typename Check>
void graph_census(CensusReport& r, int nmax, const LevelPlan& plan, std::mt19937_64& rng,
                  Check&& check) {
  level_census<Graph>(r, nmax, plan, rng, all_graphs, random_graph, check, graph_line);
}

template <typename Check>
void poset_census(CensusReport& r, int nmax, const LevelPlan& plan, std::mt19937_64& rng,
                  Check&& check) {
  level_census<Poset>(r, nmax, plan, rng, all_posets, random_poset, check, poset_line);
}

// --- chain helpers (sink/source sets of inc(P)-orientations are chains) ---

// Sorts a P-chain ascending; returns false if the vertices are not totally
// ordered by P.
bool sort_chain(const Poset& p, std::vector<int>& vs) {
  std::sort(vs.begin(), vs.end(), [&](int a, int b) { return p.less(a, b); });
  for (size_t i = 0; i + 1 < vs.size(); ++i)
    if (!p.less(vs[i], vs[i + 1])) return false;
  return true;
}

// --- individual censuses ---

void census_peqc2(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "labeled acyclic digraphs; on each complement: path/cover counts, the "
      "path-to-cycle-cover bijection, and the add-or-contract count recurrence";
  acyclic_census(r, nmax, {4, 200}, rng, [&](const Digraph& d) {
    const std::string me = digraph_line(d);
    Digraph dbar = complement(d);
    auto paths = hamiltonian_paths(dbar);
    auto covers = cycle_covers(dbar);
    if (paths.size() != covers.size())
      fail(r, me,
           "path count " + std::to_string(paths.size()) + " != cover count " +
               std::to_string(covers.size()));
    std::set<CycleCover> images;
    for (const auto& path : paths) {
      std::vector<FoataQuadruple> trace;
      CycleCover cc = foata_path_to_cycles(d, path, &trace);
      std::vector<int> current = path;
      for (const auto& quad : trace) {
        if (current.empty() ||
            !std::binary_search(quad.t.begin(), quad.t.end(), current.back()))
          fail(r, me, "peel step detached a set missing the path's last vertex");
        if (quad.s.size() + quad.t.size() != current.size())
          fail(r, me, "peel step changed the number of live vertices");
        current = quad.rho;
      }
      if (!current.empty()) fail(r, me, "peeling stopped before the path was exhausted");
      if (!images.insert(cc).second) fail(r, me, "two paths map to one cycle cover");
      if (foata_cycles_to_path(d, cc) != path)
        fail(r, me, "splicing does not invert peeling on a path");
    }
    for (const auto& cover : covers)
      if (!images.count(cover)) fail(r, me, "a cycle cover is not the image of any path");

    int n = d.vertex_count();
    auto alpha_paths = [](const Digraph& x) { return count_hamiltonian_paths(complement(x)); };
    auto alpha_covers = [](const Digraph& x) { return Int(cycle_covers(complement(x)).size()); };
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        if (v == w || d.has_arrow(v, w)) continue;
        Digraph du = d;
        du.add_arrow(v, w);
        if (!is_acyclic(du)) continue;
        Digraph dc = contract_arrow(d, v, w);
        if (alpha_paths(d) != alpha_paths(du) + alpha_paths(dc))
          fail(r, me, "path-count recurrence fails at pair (" + std::to_string(v) + "," +
                          std::to_string(w) + ")");
        if (alpha_covers(d) != alpha_covers(du) + alpha_covers(dc))
          fail(r, me, "cover-count recurrence fails at pair (" + std::to_string(v) + "," +
                          std::to_string(w) + ")");
      }
  });
}

void census_peqc1(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "labeled acyclic digraphs; on each complement the path cover sum equals "
      "the cycle cover sum as symmetric functions";
  acyclic_census(r, nmax, {4, 200}, rng, [&](const Digraph& d) {
    Digraph dbar = complement(d);
    if (!(pi_symfunc(dbar) == z_symfunc(dbar)))
      fail(r, digraph_line(d), "path-cover and cycle-cover symmetric functions differ");
  });
}

void census_rtree(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "labeled acyclic digraphs; directed-tree count on the complement equals "
      "the out-degree product over the vertex count, with the tree pairing "
      "checked on small instances";
  acyclic_census(r, nmax, {4, 100}, rng, [&](const Digraph& d) {
    const std::string me = digraph_line(d);
    int n = d.vertex_count();
    Digraph dbar = complement(d);
    Int degree_product = 1;
    for (int v = 0; v < n; ++v) degree_product *= dbar.out_degree(v);
    if (count_directed_trees(dbar) * n != degree_product)
      fail(r, me, "tree count times vertex count differs from the degree product");
    if (n > 3) return;
    auto trees = directed_trees(dbar);
    std::set<Digraph> images;
    for (const auto& tree : trees)
      for (int v = 0; v < n; ++v) {
        Digraph functional = tree_to_functional(d, v, tree);
        if (!images.insert(functional).second)
          fail(r, me, "two vertex-tree pairs map to one functional digraph");
        auto [v2, tree2] = functional_to_tree(d, functional);
        if (v2 != v || tree2 != tree) fail(r, me, "tree pairing does not round-trip");
      }
    if (Int(static_cast<long long>(images.size())) != degree_product)
      fail(r, me, "functional image count differs from the degree product");
  });
}

void census_eco_lemma(CensusReport& r, int nmax) {
  r.description =
      "integer partitions; the acyclic-subdigraph expansion of each power sum "
      "into elementary terms matches the basis conversion";
  for (int n = 1; n <= nmax; ++n)
    for (const Partition& lambda : all_partitions(n))
      checked(r, "partition " + lambda.to_string(), [&] {
        if (!(p_to_e_via_tau(lambda) == power_sum(lambda).in_basis(Basis::kElementary)))
          fail(r, "partition " + lambda.to_string(),
               "cycle-union expansion differs from the converted power sum");
      });
}

void census_zexp(CensusReport& r, int nmax, std::mt19937_64& rng, bool elementary) {
  r.description = elementary
                      ? "labeled digraphs (loops allowed); signed pair counts over typed "
                        "path covers match the elementary coefficients of the cycle sum"
                      : "labeled digraphs (loops allowed); contraction determinant sums over "
                        "typed path covers match the homogeneous coefficients of the cycle sum";
  digraph_census(r, nmax, {4, 50}, rng, [&](const Digraph& d) {
    int n = d.vertex_count();
    SymFunc z = z_symfunc(d).in_basis(elementary ? Basis::kElementary : Basis::kHomogeneous);
    for (const Partition& lambda : all_partitions(n)) {
      Rational via;
      Int direct;
      if (elementary) {
        via = parity_sign(n - lambda.length()) * z.coefficient(lambda);
        direct = z_e_coefficient_direct(d, lambda);
      } else {
        via = z.coefficient(lambda);
        direct = z_h_coefficient_direct(d, lambda);
      }
      if (Rational(direct) != via)
        fail(r, digraph_line(d),
             "direct coefficient at (" + lambda.to_string() + ") is " + direct.str() +
                 ", conversion gives " + rational_to_string(via));
    }
  });
}

void census_incpath(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "labeled posets; the path cover sum of the order digraph equals the "
      "chromatic symmetric function of the incomparability graph";
  poset_census(r, nmax, {5, 50}, rng, [&](const Poset& p) {
    if (!(pi_symfunc(p.digraph()) == chromatic_symfunc(incomparability_graph(p))))
      fail(r, poset_line(p), "chain-partition sum differs from the chromatic function");
  });
}

void census_eco(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "labeled posets; determinant sums over weakly decreasing path covers "
      "match every elementary coefficient of the chromatic function";
  poset_census(r, nmax, {5, 50}, rng, [&](const Poset& p) {
    int n = p.vertex_count();
    SymFunc x = chromatic_symfunc(incomparability_graph(p)).in_basis(Basis::kElementary);
    for (const Partition& lambda : all_partitions(n)) {
      Int direct = inc_e_coefficient(p, lambda);
      if (Rational(direct) != x.coefficient(lambda))
        fail(r, poset_line(p),
             "determinant sum at (" + lambda.to_string() + ") is " + direct.str() +
                 ", conversion gives " + rational_to_string(x.coefficient(lambda)));
    }
  });
}

void census_shatter(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "labeled posets; shattering is a bijection between weakly decreasing "
      "Hamiltonian paths and acyclic orientations of the incomparability graph";
  poset_census(r, nmax, {4, 200}, rng, [&](const Poset& p) {
    const std::string me = poset_line(p);
    auto paths = hamiltonian_paths(complement(p.digraph()));
    auto orientations = acyclic_orientations(incomparability_graph(p));
    if (paths.size() != orientations.size())
      fail(r, me,
           "path count " + std::to_string(paths.size()) + " != orientation count " +
               std::to_string(orientations.size()));
    std::set<Orientation> images;
    for (const auto& path : paths) {
      Orientation a = shatter_r(p, path);
      if (!a.is_acyclic()) fail(r, me, "image orientation has a directed cycle");
      if (!images.insert(a).second) fail(r, me, "two paths shatter to one orientation");
      if (shatter_s(p, a) != path) fail(r, me, "sink peeling does not invert shattering");
    }
    for (const auto& a : orientations) {
      auto path = shatter_s(p, a);
      for (size_t i = 0; i + 1 < path.size(); ++i)
        if (p.less(path[i], path[i + 1]))
          fail(r, me, "shatter path increases at step " + std::to_string(i));
      if (shatter_r(p, path) != a) fail(r, me, "shattering does not invert sink peeling");
      (void)is_circular(p, a);  // exercises the two-criterion cross-check
    }
  });
}

void census_second_sink(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "labeled posets with connected incomparability graph; per vertex, the "
      "second-sink walks pair circular orientations with that greatest sink "
      "against unique-sink orientations there, with per-flip invariants replayed";
  poset_census(r, nmax, {4, 200}, rng, [&](const Poset& p) {
    Graph inc = incomparability_graph(p);
    if (!inc.is_connected()) return;
    const std::string me = poset_line(p);
    int n = p.vertex_count();
    std::vector<std::set<Orientation>> circular(n), unique_sink(n);
    auto orientations = acyclic_orientations(inc);
    for (const auto& a : orientations) {
      std::vector<int> sinks = a.sinks();
      if (!sort_chain(p, sinks)) {
        fail(r, me, "sink set of an orientation is not a chain");
        continue;
      }
      if (sinks.size() == 1) unique_sink[sinks[0]].insert(a);
      if (is_circular(p, a)) circular[sinks.back()].insert(a);
    }

    auto replay = [&](const Orientation& start, const std::vector<int>& flips, bool forward) {
      Orientation cur = start;
      for (int v : flips) {
        std::vector<int> before = forward ? cur.sinks() : cur.sources();
        if (!sort_chain(p, before)) {
          fail(r, me, "flip replay found a non-chain sink/source set");
          return cur;
        }
        int expected = forward ? (before.size() >= 2 ? before[before.size() - 2] : -1)
                               : (before.empty() ? -1 : before.front());
        if (v != expected) {
          fail(r, me, "flip replay disagrees with the recorded flip sequence");
          return cur;
        }
        cur = cur.flipped(v);
        std::vector<int> after = forward ? cur.sources() : cur.sinks();
        if (!sort_chain(p, after)) {
          fail(r, me, "flip replay found a non-chain sink/source set");
          return cur;
        }
        bool invariant = forward ? (!after.empty() && after.front() == v)
                                 : (after.size() >= 2 && after[after.size() - 2] == v);
        if (!invariant)
          fail(r, me, forward ? "a flipped sink is not the smallest source"
                              : "a flipped source is not the second-greatest sink");
      }
      return cur;
    };

    for (int v = 0; v < n; ++v) {
      std::set<Orientation> images;
      for (const auto& a : circular[v]) {
        std::vector<int> flips;
        Orientation b = second_sink_t(p, a, &flips);
        if (replay(a, flips, true) != b) fail(r, me, "flip replay does not reach the image");
        std::vector<int> sinks = b.sinks();
        if (sinks.size() != 1 || sinks[0] != v)
          fail(r, me, "image does not have its unique sink at the greatest sink");
        if (!images.insert(b).second)
          fail(r, me, "two circular orientations map to one unique-sink orientation");
        std::vector<int> back_flips;
        Orientation back = second_sink_u(p, b, &back_flips);
        if (replay(b, back_flips, false) != back)
          fail(r, me, "flip replay does not reach the image");
        if (back != a) fail(r, me, "source flipping does not invert sink flipping");
      }
      if (images != unique_sink[v])
        fail(r, me, "circular orientations at vertex " + std::to_string(v) +
                        " do not map onto the unique-sink orientations there");
      for (const auto& b : unique_sink[v]) {
        Orientation a = second_sink_u(p, b);
        if (!is_circular(p, a)) fail(r, me, "source flipping did not reach a circular orientation");
        if (second_sink_t(p, a) != b) fail(r, me, "sink flipping does not invert source flipping");
      }
    }
  });
}

void census_sls(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "labeled graphs; the sink sequence map is a bijection from acyclic "
      "orientations onto stable link sequences, inverted by block orientation";
  graph_census(r, nmax, {4, 200}, rng, [&](const Graph& g) {
    const std::string me = graph_line(g);
    auto sequences = stable_link_sequences(g);
    auto orientations = acyclic_orientations(g);
    if (sequences.size() != orientations.size())
      fail(r, me,
           "sequence count " + std::to_string(sequences.size()) + " != orientation count " +
               std::to_string(orientations.size()));
    std::set<OrderedSetPartition> sequence_set(sequences.begin(), sequences.end());
    std::set<OrderedSetPartition> images;
    for (const auto& a : orientations) {
      OrderedSetPartition sigma = sink_sequence_f(g, a);
      if (!sequence_set.count(sigma))
        fail(r, me, "a sink sequence is not a stable link sequence");
      if (!images.insert(sigma).second) fail(r, me, "two orientations share a sink sequence");
      if (link_sequence_to_orientation(g, sigma) != a)
        fail(r, me, "block orientation does not invert the sink sequence map");
    }
    for (const auto& sigma : sequences)
      if (sink_sequence_f(g, link_sequence_to_orientation(g, sigma)) != sigma)
        fail(r, me, "the sink sequence map does not invert block orientation");
  });
}

void census_eta(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "labeled graphs; the signed connected-subgraph polynomial at -1, the "
      "count of orientations with unique sink at vertex 0, and the signed "
      "top power-sum coefficient of the chromatic function all agree";
  graph_census(r, nmax, {4, 200}, rng, [&](const Graph& g) {
    const std::string me = graph_line(g);
    int n = g.vertex_count();
    Int sign = parity_sign(n - 1);
    Int via_eta = sign * eta_polynomial(g).evaluate(-1);
    Int unique_at_zero = 0;
    for (const auto& a : acyclic_orientations(g)) {
      auto sinks = a.sinks();
      if (sinks.size() == 1 && sinks[0] == 0) ++unique_at_zero;
    }
    Rational via_p = Rational(sign) *
                     chromatic_symfunc(g).coefficient(Partition::single(n), Basis::kPower);
    if (via_eta != unique_at_zero)
      fail(r, me,
           "polynomial route gives " + via_eta.str() + ", orientation count is " +
               unique_at_zero.str());
    if (Rational(unique_at_zero) != via_p)
      fail(r, me,
           "orientation count is " + unique_at_zero.str() + ", coefficient route gives " +
               rational_to_string(via_p));
  });
}

void census_pathsum(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "labeled digraphs (loops allowed); the signed split-path sum vanishes, "
      "the vertex-transfer involution acts freely and sign-reversingly, and "
      "the signed complement path map is the convolution inverse";
  digraph_census(r, nmax, {4, 200}, rng, [&](const Digraph& d) {
    const std::string me = digraph_line(d);
    int n = d.vertex_count();
    if (pathsum_signed_sum(d) != 0) fail(r, me, "signed split-path sum is not zero");

    SetMap h = path_setmap(d);
    SetMap inverse = setmap_inverse(h);
    SetMap pbar = path_setmap(complement(d));
    SetMap signed_pbar(n);
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s)
      signed_pbar.set_value(s, Rational(parity_sign(std::popcount(s))) * pbar.value(s));
    if (inverse != signed_pbar)
      fail(r, me, "convolution inverse differs from the signed complement path map");
    if (setmap_multiply(h, signed_pbar) != SetMap::identity(n))
      fail(r, me, "signed complement path map is not a right inverse");

    if (n > 3) return;
    auto pairs = all_path_pairs(d);
    for (const auto& pair : pairs) {
      PathPair image = pathsum_involution(d, pair);
      if (image == pair) fail(r, me, "vertex transfer has a fixed point");
      if (image.complement_path.size() % 2 == pair.complement_path.size() % 2)
        fail(r, me, "vertex transfer preserves the sign");
      if (pathsum_involution(d, image) != pair) fail(r, me, "vertex transfer is not an involution");
      if (!std::binary_search(pairs.begin(), pairs.end(), image))
        fail(r, me, "vertex transfer leaves the split-path family");
    }
  });
}

void census_lass(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "path set maps of labeled digraphs plus random invertible set maps with "
      "unit empty-set value; the reciprocity identity holds on every nonempty "
      "vertex subset";
  digraph_census(r, nmax, {3, 500}, rng, [&](const Digraph& d) {
    const std::string me = digraph_line(d);
    SetMap h = path_setmap(d);
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << d.vertex_count()); ++s)
      if (!lass_reciprocity_check(h, s))
        fail(r, me, "reciprocity fails on subset mask " + std::to_string(s));
  });
  r.sampled = true;  // the random suite below always draws from the generator
  const int ground = 4;
  for (int k = 0; k < 100; ++k) {
    SetMap h(ground);
    h.set_value(0, 1);
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << ground); ++s)
      h.set_value(s, Rational(static_cast<long long>(rng() % 7) - 3));
    checked(r, "random set map " + std::to_string(k), [&] {
      for (std::uint32_t s = 1; s < (std::uint32_t(1) << ground); ++s)
        if (!lass_reciprocity_check(h, s))
          fail(r, "random set map " + std::to_string(k),
               "reciprocity fails on subset mask " + std::to_string(s) + " of " +
                   one_line(setmap_to_json(h)));
    });
  }
}

void census_berge_lass(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "labeled digraphs (loops allowed); the partition sum over restriction "
      "cycle counts reproduces the Hamiltonian path count";
  digraph_census(r, nmax, {4, 100}, rng, [&](const Digraph& d) {
    Int direct = count_hamiltonian_paths(d);
    Int via_cycles = pi_via_berge_lass(d);
    if (direct != via_cycles)
      fail(r, digraph_line(d),
           "path count " + direct.str() + " != partition sum " + via_cycles.str());
  });
}

void census_omega_reciprocity(CensusReport& r, int nmax, std::mt19937_64& rng) {
  r.description =
      "labeled digraphs (loops allowed); the omega image of the path cover sum "
      "equals the path cover sum of the complement";
  digraph_census(r, nmax, {3, 500}, rng, [&](const Digraph& d) {
    if (!(omega(pi_symfunc(d)) == pi_symfunc(complement(d))))
      fail(r, digraph_line(d), "omega image differs from the complement path cover sum");
  });
}

}  // namespace

const std::vector<std::string>& census_ids() {
  static const std::vector<std::string> ids = {
      "peqc2",   "peqc1",       "rtree", "eco-lemma", "zexp1",   "zexp2",
      "incpath", "eco",         "shatter", "second-sink", "sls",  "eta",
      "pathsum", "lass",        "berge-lass", "omega-reciprocity"};
  return ids;
}

bool is_census_id(const std::string& id) {
  const auto& ids = census_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

int census_hard_cap() {
  if (const char* env = std::getenv("CYCLECOVER_NMAX_HARD")) {
    try {
      size_t used = 0;
      int cap = std::stoi(env, &used);
      if (used == std::strlen(env) && cap >= 1) return cap;
    } catch (const std::exception&) {
    }
    throw DomainError("CYCLECOVER_NMAX_HARD must be a positive integer");
  }
  return 6;
}

CensusReport run_census(const std::string& id, int nmax, std::optional<std::uint64_t> seed) {
  if (!is_census_id(id)) throw ParseError("unknown theorem id '" + id + "'");
  if (nmax < 1) throw DomainError("nmax must be at least 1");
  if (nmax > census_hard_cap())
    throw DomainError("nmax " + std::to_string(nmax) + " exceeds the hard cap " +
                      std::to_string(census_hard_cap()));

  CensusReport r;
  r.theorem = id;
  r.nmax = nmax;
  r.seed = seed.value_or(1);
  std::mt19937_64 rng(r.seed);
  auto start = Clock::now();

  if (id == "peqc2") census_peqc2(r, nmax, rng);
  else if (id == "peqc1") census_peqc1(r, nmax, rng);
  else if (id == "rtree") census_rtree(r, nmax, rng);
  else if (id == "eco-lemma") census_eco_lemma(r, nmax);
  else if (id == "zexp1") census_zexp(r, nmax, rng, true);
  else if (id == "zexp2") census_zexp(r, nmax, rng, false);
  else if (id == "incpath") census_incpath(r, nmax, rng);
  else if (id == "eco") census_eco(r, nmax, rng);
  else if (id == "shatter") census_shatter(r, nmax, rng);
  else if (id == "second-sink") census_second_sink(r, nmax, rng);
  else if (id == "sls") census_sls(r, nmax, rng);
  else if (id == "eta") census_eta(r, nmax, rng);
  else if (id == "pathsum") census_pathsum(r, nmax, rng);
  else if (id == "lass") census_lass(r, nmax, rng);
  else if (id == "berge-lass") census_berge_lass(r, nmax, rng);
  else if (id == "omega-reciprocity") census_omega_reciprocity(r, nmax, rng);

  std::sort(r.failures.begin(), r.failures.end());
  r.failures.erase(std::unique(r.failures.begin(), r.failures.end()), r.failures.end());
  r.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

ScanReport scan_posets(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (n > census_hard_cap())
    throw DomainError("n " + std::to_string(n) + " exceeds the hard cap " +
                      std::to_string(census_hard_cap()));

  ScanReport report;
  report.n = n;
  auto start = Clock::now();
  for (const Poset& p : all_posets(n)) {
    ++report.instances;
    const std::string me = poset_line(p);
    try {
      SymFunc x = chromatic_symfunc(incomparability_graph(p)).in_basis(Basis::kElementary);
      bool positive = true;
      for (const Partition& lambda : all_partitions(n)) {
        Rational via_conversion = x.coefficient(lambda);
        if (via_conversion < 0) positive = false;
        if (Rational(inc_e_coefficient(p, lambda)) != via_conversion)
          report.failures.push_back(me + " | coefficient routes disagree at (" +
                                    lambda.to_string() + ")");
      }
      if (!positive) report.findings.push_back({me, is_three_plus_one_free(p)});
    } catch (const std::exception& e) {
      report.failures.push_back(me + " | exception: " + e.what());
    }
  }
  std::sort(report.failures.begin(), report.failures.end());
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

std::string census_report_to_json(const CensusReport& report) {
  nlohmann::ordered_json j;
  j["theorem"] = report.theorem;
  j["description"] = report.description;
  j["nmax"] = report.nmax;
  j["instances"] = report.instances;
  j["sampled"] = report.sampled;
  if (report.sampled) j["seed"] = report.seed;
  j["pass"] = report.pass();
  j["failures"] = report.failures;
  return j.dump(2) + "\n";
}

std::string scan_report_to_json(const ScanReport& report) {
  nlohmann::ordered_json j;
  j["scan"] = "posets";
  j["n"] = report.n;
  j["instances"] = report.instances;
  j["pass"] = report.pass();
  j["failures"] = report.failures;
  j["findings"] = nlohmann::ordered_json::array();
  for (const auto& finding : report.findings) {
    nlohmann::ordered_json f;
    f["poset"] = finding.poset;
    f["three_plus_one_free"] = finding.three_plus_one_free;
    j["findings"].push_back(std::move(f));
  }
  return j.dump(2) + "\n";
}

std::vector<Digraph> all_digraphs(int n) {
  if (n < 1 || n * n > 30) throw DomainError("digraph enumeration needs 1 <= n*n <= 30 bits");
  std::vector<Digraph> out;
  out.reserve(std::size_t(1) << (n * n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n * n)); ++mask) {
    Digraph d(n);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (mask >> (v * n + w) & 1) d.add_arrow(v, w);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Digraph> all_acyclic_digraphs(int n) {
  std::vector<Digraph> out;
  for (Digraph& d : all_digraphs(n))
    if (is_acyclic(d)) out.push_back(std::move(d));
  return out;
}

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > 8) throw DomainError("graph enumeration needs 1 <= n <= 8");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  out.reserve(std::size_t(1) << slots.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots.size()); ++mask) {
    Graph g(n);
    for (size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1) g.add_edge(slots[k].first, slots[k].second);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Poset> all_posets(int n) {
  if (n < 1 || n > 5) throw DomainError("poset enumeration needs 1 <= n <= 5");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) slots.emplace_back(u, v);
  std::vector<Poset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots.size()); ++mask) {
    Digraph d(n);
    for (size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1) d.add_arrow(slots[k].first, slots[k].second);
    bool transitive = true;
    for (int u = 0; u < n && transitive; ++u)
      for (int v = 0; v < n && transitive; ++v)
        if (d.has_arrow(u, v) && (d.out_row(v) & ~d.out_row(u)))
          transitive = false;
    if (!transitive) continue;
    bool antisymmetric = true;
    for (int u = 0; u < n && antisymmetric; ++u)
      for (int v = u + 1; v < n; ++v)
        if (d.has_arrow(u, v) && d.has_arrow(v, u)) {
          antisymmetric = false;
          break;
        }
    if (!antisymmetric) continue;
    out.emplace_back(n, d.arrows());
  }
  return out;
}

bool is_three_plus_one_free(const Poset& p) {
  int n = p.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!(p.less(a, b) && p.less(b, c))) continue;
        for (int x = 0; x < n; ++x) {
          if (x == a || x == b || x == c) continue;
          if (!p.comparable(x, a) && !p.comparable(x, b) && !p.comparable(x, c)) return false;
        }
      }
  return true;
}

Digraph random_digraph(int n, std::mt19937_64& rng) {
  if (n < 1 || n * n > 64) throw DomainError("digraph sampling needs 1 <= n*n <= 64 bits");
  std::uint64_t mask = rng();
  Digraph d(n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (mask >> (v * n + w) & 1) d.add_arrow(v, w);
  return d;
}

Digraph random_acyclic_digraph(int n, std::mt19937_64& rng) {
  for (long long attempt = 0; attempt < 100000000; ++attempt) {
    Digraph d = random_digraph(n, rng);
    if (is_acyclic(d)) return d;
  }
  throw DomainError("acyclic rejection sampling exceeded its attempt budget");
}

Graph random_graph(int n, std::mt19937_64& rng) {
  if (n < 1 || n > 11) throw DomainError("graph sampling needs 1 <= n <= 11");
  std::uint64_t mask = rng();
  Graph g(n);
  int k = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++k)
      if (mask >> k & 1) g.add_edge(u, v);
  return g;
}

Poset random_poset(int n, std::mt19937_64& rng) {
  Digraph d = random_acyclic_digraph(n, rng);
  return Poset::from_relations_closure(n, d.arrows());
}

}  // namespace cyclecover
