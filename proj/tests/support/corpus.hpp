#ifndef CLPA_TESTS_CORPUS_HPP_
#define CLPA_TESTS_CORPUS_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "clpa/classify.hpp"
#include "clpa/cl_algebra.hpp"
#include "clpa/graph.hpp"

namespace clpa::test {

  inline constexpr std::uint32_t seed = 20240521;

  /// A graph on vertices v0..v{n-1} with mult[i*n + j] edges from vi to vj.
  inline Graph graph_from_multiplicities(std::size_t n, std::vector<int> const& mult) {
    std::vector<std::string>     vertices;
    std::vector<Graph::EdgeSpec> edges;
    for (std::size_t i = 0; i < n; ++i) {
      vertices.push_back("v" + std::to_string(i));
    }
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (int k = 0; k < mult[i * n + j]; ++k) {
          auto const id = "e" + std::string(next < 10 ? "0" : "") + std::to_string(next);
          edges.push_back({id, vertices[i], vertices[j]});
          ++next;
        }
      }
    }
    return Graph(vertices, edges);
  }

  /// Every graph with 1..max_n vertices, at most `max_mult` parallel edges
  /// between distinct vertices, and at most one loop per vertex.
  inline std::vector<Graph> all_graphs(std::size_t max_n, int max_mult) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::vector<int> mult(n * n, 0);
      while (true) {
        out.push_back(graph_from_multiplicities(n, mult));
        std::size_t k = 0;
        for (; k < mult.size(); ++k) {
          int const cap = (k / n == k % n) ? 1 : max_mult;
          if (mult[k] < cap) {
            ++mult[k];
            break;
          }
          mult[k] = 0;
        }
        if (k == mult.size()) {
          break;
        }
      }
    }
    return out;
  }

  /// Every object (E, S) over `graphs` whose S is a subset of R(E).
  inline std::vector<CLObject> all_objects(std::vector<Graph> const& graphs) {
    std::vector<CLObject> out;
    for (auto const& g : graphs) {
      std::vector<Vertex> regular;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.is_regular(v)) {
          regular.push_back(v);
        }
      }
      for (std::uint32_t mask = 0; mask < (1U << regular.size()); ++mask) {
        std::vector<Vertex> s;
        for (std::size_t i = 0; i < regular.size(); ++i) {
          if ((mask >> i) & 1U) {
            s.push_back(regular[i]);
          }
        }
        out.emplace_back(g, s);
      }
    }
    return out;
  }

  /// One representative of every object (E, S) with 1..max_n vertices, at
  /// most `max_mult` parallel edges between distinct vertices and at most
  /// one loop per vertex, up to relabelling the vertices.
  inline std::vector<CLObject> all_objects_up_to_iso(std::size_t max_n, int max_mult) {
    std::vector<CLObject> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::vector<std::size_t> identity(n);
      for (std::size_t i = 0; i < n; ++i) {
        identity[i] = i;
      }
      std::vector<std::vector<std::size_t>> perms;
      do {
        perms.push_back(identity);
      } while (std::next_permutation(identity.begin(), identity.end()));
      auto permuted = [n](std::vector<int> const& mult, std::vector<std::size_t> const& pi) {
        std::vector<int> out(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            out[pi[i] * n + pi[j]] = mult[i * n + j];
          }
        }
        return out;
      };
      std::vector<int> mult(n * n, 0);
      while (true) {
        // Keep the graph only when its matrix is the least among relabellings.
        std::vector<std::vector<std::size_t>> automorphisms;
        bool                                  least = true;
        for (auto const& pi : perms) {
          auto const image = permuted(mult, pi);
          if (image < mult) {
            least = false;
            break;
          }
          if (image == mult) {
            automorphisms.push_back(pi);
          }
        }
        if (least) {
          auto const          g = graph_from_multiplicities(n, mult);
          std::vector<Vertex> regular;
          for (Vertex v = 0; v < n; ++v) {
            if (g.is_regular(v)) {
              regular.push_back(v);
            }
          }
          for (std::uint32_t mask = 0; mask < (1U << regular.size()); ++mask) {
            std::vector<bool> in_s(n, false);
            for (std::size_t i = 0; i < regular.size(); ++i) {
              in_s[regular[i]] = ((mask >> i) & 1U) != 0;
            }
            // Keep S only when it is the least among its images under the
            // automorphisms of the graph.
            bool s_least = true;
            for (auto const& pi : automorphisms) {
              std::vector<bool> image(n, false);
              for (std::size_t i = 0; i < n; ++i) {
                image[pi[i]] = in_s[i];
              }
              s_least = s_least && !(image < in_s);
            }
            if (s_least) {
              std::vector<Vertex> s;
              for (Vertex v = 0; v < n; ++v) {
                if (in_s[v]) {
                  s.push_back(v);
                }
              }
              out.emplace_back(g, s);
            }
          }
        }
        std::size_t k = 0;
        for (; k < mult.size(); ++k) {
          int const cap = (k / n == k % n) ? 1 : max_mult;
          if (mult[k] < cap) {
            ++mult[k];
            break;
          }
          mult[k] = 0;
        }
        if (k == mult.size()) {
          break;
        }
      }
    }
    return out;
  }

  inline std::vector<CLObject> no_exit_objects(std::vector<CLObject> const& objects) {
    std::vector<CLObject> out;
    for (auto const& o : objects) {
      if (check_no_exit_object(o).ok) {
        out.push_back(o);
      }
    }
    return out;
  }

  /// A random graph with n vertices, each ordered pair getting an edge
  /// with probability p (loops with probability p / 2), and a random S.
  inline CLObject random_object(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution edge(p), loop(p / 2), in_s(0.5);
    std::vector<int>            mult(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mult[i * n + j] = (i == j ? loop(rng) : edge(rng)) ? 1 : 0;
      }
    }
    auto                g = graph_from_multiplicities(n, mult);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.is_regular(v) && in_s(rng)) {
        s.push_back(v);
      }
    }
    return CLObject(std::move(g), s);
  }

  /// A random no-exit object: a random graph is tried until one passes.
  inline CLObject random_no_exit_object(std::mt19937& rng, std::size_t n, double p) {
    while (true) {
      auto obj = random_object(rng, n, p);
      // Put every cycle vertex into S, then test the graph condition.
      std::vector<Vertex> s = obj.s_vertices();
      for (auto const& c : cycles(obj.graph())) {
        for (auto v : c.vertices(obj.graph())) {
          s.push_back(v);
        }
      }
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      CLObject candidate(obj.graph(), s);
      if (check_no_exit_object(candidate).ok) {
        return candidate;
      }
    }
  }

  /// A random combination of up to `terms` monomials p q^* with |p|, |q|
  /// at most max_len and small integer coefficients.
  inline AlgebraElement random_element(std::mt19937&      rng,
                                       CLAlgebra const&   A,
                                       std::size_t        max_len = 2,
                                       std::size_t        terms   = 3) {
    auto const&                                 g     = A.graph();
    auto const                                  paths = paths_up_to(g, max_len);
    std::uniform_int_distribution<std::size_t>  pick(0, paths.size() - 1);
    std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
    std::uniform_int_distribution<std::size_t>  count(1, terms);
    auto                                        x = A.zero();
    auto const                                  k = count(rng);
    for (std::size_t t = 0; t < k; ++t) {
      auto const&       p = paths[pick(rng)];
      std::vector<Path> partners;
      for (auto const& q : paths) {
        if (q.range == p.range) {
          partners.push_back(q);
        }
      }
      std::uniform_int_distribution<std::size_t> which(0, partners.size() - 1);
      x += A.monomial(p, partners[which(rng)], A.field().from_int(coeff(rng)));
    }
    return x;
  }

  /// A random homogeneous element of degree d (possibly zero).
  inline AlgebraElement random_homogeneous(std::mt19937&    rng,
                                           CLAlgebra const& A,
                                           std::int64_t     d,
                                           std::size_t      max_len = 3) {
    auto const&                                 g     = A.graph();
    auto const                                  paths = paths_up_to(g, max_len);
    std::uniform_int_distribution<std::int64_t> coeff(-2, 2);
    std::vector<Monomial>                       candidates;
    for (auto const& p : paths) {
      for (auto const& q : paths) {
        if (q.range == p.range
            && static_cast<std::int64_t>(p.length()) - static_cast<std::int64_t>(q.length()) == d) {
          candidates.push_back({p, q});
        }
      }
    }
    auto x = A.zero();
    if (candidates.empty()) {
      return x;
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    for (int t = 0; t < 3; ++t) {
      auto const& m = candidates[pick(rng)];
      x += A.monomial(m.p, m.q, A.field().from_int(coeff(rng)));
    }
    return x;
  }

  /// The fan with n sinks: v emits e_i to the sink u_i, S empty.
  inline CLObject fan(std::size_t n) {
    std::vector<std::string>     vertices{"v"};
    std::vector<Graph::EdgeSpec> edges;
    for (std::size_t i = 1; i <= n; ++i) {
      vertices.push_back("u" + std::to_string(i));
      edges.push_back({"e" + std::to_string(i), "v", "u" + std::to_string(i)});
    }
    return CLObject(Graph(vertices, edges), std::vector<Vertex>{});
  }

  inline CLObject loop(bool in_s) {
    Graph g({"v"}, {{"c", "v", "v"}});
    return in_s ? CLObject(g, std::vector<std::string>{"v"}) : CLObject(g, std::vector<std::string>{});
  }

  inline CLObject rose() {
    return CLObject(Graph({"v"}, {{"c", "v", "v"}, {"d", "v", "v"}}), std::vector<std::string>{"v"});
  }

  inline CLObject two_cycle() {
    return CLObject(Graph({"v1", "v2"}, {{"a", "v1", "v2"}, {"b", "v2", "v1"}}),
                    std::vector<std::string>{"v1", "v2"});
  }

  /// A 2-cycle a <-> b with an exit x : b -> w, S = {a, b}.
  inline CLObject two_cycle_with_exit() {
    return CLObject(Graph({"a", "b", "w"}, {{"f", "a", "b"}, {"g", "b", "a"}, {"x", "b", "w"}}),
                    std::vector<std::string>{"a", "b"});
  }

  inline CLObject bifurcation(bool in_s) {
    Graph g({"u1", "u2", "v"}, {{"e1", "v", "u1"}, {"e2", "v", "u2"}});
    return in_s ? CLObject(g, std::vector<std::string>{"v"}) : CLObject(g, std::vector<std::string>{});
  }

}  // namespace clpa::test

#endif  // CLPA_TESTS_CORPUS_HPP_
