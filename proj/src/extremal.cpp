#include "bullchrome/extremal.hpp"

#include <random>
#include <sstream>

#include "bullchrome/errors.hpp"
#include "bullchrome/modular.hpp"
#include "bullchrome/recognition.hpp"

namespace bullchrome {

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) out << '/' << boost::multiprecision::denominator(r);
  return out.str();
}

Graph mycielski_step(const Graph& g) {
  const int k = g.vertex_count();
  GraphBuilder b(2 * k + 1);
  for (auto [u, v] : g.edges()) {
    b.add_edge(u, v);
    b.add_edge(k + u, v);
    b.add_edge(u, k + v);
  }
  for (int i = 0; i < k; ++i) b.add_edge(k + i, 2 * k);
  return b.build();
}

Graph mycielski_graph(int n) {
  if (n < 1) throw InvalidArgument("Mycielski index must be at least 1");
  Graph g = complete_graph(2);
  for (int i = 1; i < n; ++i) g = mycielski_step(g);
  return g;
}

namespace {

std::vector<VertexSet> maximal_stable_sets(const Graph& g) {
  const Graph co = complement(g);
  std::vector<VertexSet> out;
  // Bron-Kerbosch with pivoting on the complement.
  auto bk = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
    if (p.empty()) {
      if (x.empty()) out.push_back(r);
      return;
    }
    const VertexSet px = p | x;
    int pivot = px.first();
    int best = -1;
    for (int u : px) {
      const int c = (p & co.row(u)).size();
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (int v : p - co.row(pivot)) {
      VertexSet r2 = r;
      r2.insert(v);
      self(self, r2, p & co.row(v), x & co.row(v));
      p.erase(v);
      x.insert(v);
    }
  };
  bk(bk, VertexSet{}, g.vertices(), VertexSet{});
  return out;
}

// Dictionary simplex for max sum(y) s.t. sum_{v in I} y_v <= 1 for every
// row I, y >= 0. Variables 0..n-1 are y, n..n+m-1 are slacks.
class FractionalCliqueLp {
 public:
  FractionalCliqueLp(int n, const std::vector<VertexSet>& rows)
      : n_(n), m_(static_cast<int>(rows.size())), a_(rows.size(), std::vector<Rational>(static_cast<std::size_t>(n))),
        b_(rows.size(), Rational(1)), c_(static_cast<std::size_t>(n), Rational(1)) {
    for (int i = 0; i < m_; ++i) {
      basic_.push_back(n_ + i);
      for (int v : rows[static_cast<std::size_t>(i)]) a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = 1;
    }
    for (int j = 0; j < n_; ++j) nonbasic_.push_back(j);
  }

  void solve() {
    while (true) {
      int s = -1;
      for (int j = 0; j < n_; ++j)
        if (c_[static_cast<std::size_t>(j)] > 0 && (s < 0 || nonbasic_[static_cast<std::size_t>(j)] < nonbasic_[static_cast<std::size_t>(s)])) s = j;
      if (s < 0) return;
      int r = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        const Rational& coef = a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
        if (coef <= 0) continue;
        Rational ratio = b_[static_cast<std::size_t>(i)] / coef;
        if (r < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basic_[static_cast<std::size_t>(i)] < basic_[static_cast<std::size_t>(r)])) {
          r = i;
          best_ratio = std::move(ratio);
        }
      }
      if (r < 0) throw CertificationError("fractional clique LP reported unbounded");
      pivot(r, s);
    }
  }

  Rational value() const { return z_; }

  std::vector<Rational> clique_weights() const {
    std::vector<Rational> y(static_cast<std::size_t>(n_));
    for (int i = 0; i < m_; ++i)
      if (basic_[static_cast<std::size_t>(i)] < n_) y[static_cast<std::size_t>(basic_[static_cast<std::size_t>(i)])] = b_[static_cast<std::size_t>(i)];
    return y;
  }

  /// Dual values of the row constraints: minus the reduced cost of each
  /// nonbasic slack.
  std::vector<Rational> row_duals() const {
    std::vector<Rational> x(static_cast<std::size_t>(m_));
    for (int j = 0; j < n_; ++j)
      if (nonbasic_[static_cast<std::size_t>(j)] >= n_)
        x[static_cast<std::size_t>(nonbasic_[static_cast<std::size_t>(j)] - n_)] = -c_[static_cast<std::size_t>(j)];
    return x;
  }

 private:
  void pivot(int r, int s) {
    auto& row = a_[static_cast<std::size_t>(r)];
    const Rational piv = row[static_cast<std::size_t>(s)];
    for (int j = 0; j < n_; ++j)
      if (j != s) row[static_cast<std::size_t>(j)] /= piv;
    row[static_cast<std::size_t>(s)] = Rational(1) / piv;
    b_[static_cast<std::size_t>(r)] /= piv;

    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      auto& other = a_[static_cast<std::size_t>(i)];
      const Rational f = other[static_cast<std::size_t>(s)];
      if (f == 0) continue;
      for (int j = 0; j < n_; ++j)
        if (j != s) other[static_cast<std::size_t>(j)] -= f * row[static_cast<std::size_t>(j)];
      other[static_cast<std::size_t>(s)] = -f * row[static_cast<std::size_t>(s)];
      b_[static_cast<std::size_t>(i)] -= f * b_[static_cast<std::size_t>(r)];
    }
    const Rational f = c_[static_cast<std::size_t>(s)];
    for (int j = 0; j < n_; ++j)
      if (j != s) c_[static_cast<std::size_t>(j)] -= f * row[static_cast<std::size_t>(j)];
    c_[static_cast<std::size_t>(s)] = -f * row[static_cast<std::size_t>(s)];
    z_ += f * b_[static_cast<std::size_t>(r)];
    std::swap(basic_[static_cast<std::size_t>(r)], nonbasic_[static_cast<std::size_t>(s)]);
  }

  int n_, m_;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_, c_;
  Rational z_{0};
  std::vector<int> basic_, nonbasic_;
};

}  // namespace

FractionalResult fractional_chromatic(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw CapExceeded("fractional chromatic number on " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(cap));
  FractionalResult out;
  if (n == 0) return out;
  const std::vector<VertexSet> stable = maximal_stable_sets(g);
  FractionalCliqueLp lp(n, stable);
  lp.solve();
  out.value = lp.value();
  out.vertex_weights = lp.clique_weights();
  const std::vector<Rational> x = lp.row_duals();

  // Independent re-validation of both certificates.
  Rational weight_sum = 0;
  for (const Rational& y : out.vertex_weights) {
    if (y < 0) throw CertificationError("negative fractional clique weight");
    weight_sum += y;
  }
  for (const VertexSet& s : stable) {
    Rational sum = 0;
    for (int v : s) sum += out.vertex_weights[static_cast<std::size_t>(v)];
    if (sum > 1) throw CertificationError("fractional clique overloads a stable set");
  }
  std::vector<Rational> covered(static_cast<std::size_t>(n));
  Rational cover_sum = 0;
  for (std::size_t i = 0; i < stable.size(); ++i) {
    if (x[i] < 0) throw CertificationError("negative stable-set weight");
    if (x[i] == 0) continue;
    out.cover.emplace_back(stable[i], x[i]);
    cover_sum += x[i];
    for (int v : stable[i]) covered[static_cast<std::size_t>(v)] += x[i];
  }
  for (const Rational& c : covered)
    if (c < 1) throw CertificationError("fractional cover misses a vertex");
  if (weight_sum != out.value || cover_sum != out.value)
    throw CertificationError("fractional clique and cover values disagree");
  return out;
}

Rational phi_recursion(int n) {
  if (n < 1) throw InvalidArgument("phi index must be at least 1");
  if (n > kPhiExactCap)
    throw CapExceeded("exact phi_n beyond n = " + std::to_string(kPhiExactCap) + " is too large to represent");
  Rational phi = 2;
  for (int k = 1; k < n; ++k) phi += Rational(1) / phi;
  return phi;
}

namespace {

constexpr unsigned kPhiBits = 256;

// floor(x * 2^kPhiBits) for a lower bound x of phi_{k+1}, given the same for
// phi_k. Since x + 1/x increases for x >= 1 and every bound is >= 2, rounding
// down keeps it a lower bound.
boost::multiprecision::cpp_int phi_lower_step(const boost::multiprecision::cpp_int& scaled) {
  const boost::multiprecision::cpp_int one_squared = boost::multiprecision::cpp_int(1) << (2 * kPhiBits);
  return scaled + one_squared / scaled;
}

bool scaled_square_at_least(const boost::multiprecision::cpp_int& scaled, int n) {
  return scaled * scaled >= (boost::multiprecision::cpp_int(2 * (n + 1)) << (2 * kPhiBits));
}

bool exact_phi_check(int n) {
  const Rational phi = phi_recursion(n);
  return phi * phi >= Rational(2 * (n + 1));
}

}  // namespace

bool phi_lower_bound_check(int n) {
  if (n < 1) throw InvalidArgument("phi index must be at least 1");
  if (n <= kPhiExactCap) return exact_phi_check(n);
  boost::multiprecision::cpp_int scaled = boost::multiprecision::cpp_int(2) << kPhiBits;
  for (int k = 1; k < n; ++k) scaled = phi_lower_step(scaled);
  return scaled_square_at_least(scaled, n);
}

std::optional<int> phi_lower_bound_first_failure(int n_max) {
  boost::multiprecision::cpp_int scaled = boost::multiprecision::cpp_int(2) << kPhiBits;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) scaled = phi_lower_step(scaled);
    const bool holds = n <= kPhiExactCap ? exact_phi_check(n) : scaled_square_at_least(scaled, n);
    if (!holds) return n;
  }
  return std::nullopt;
}

bool fractional_exceeds_power_of_two(const Graph& h, int d, int cap) {
  if (auto tri = find_triangle(h)) throw PreconditionError("graph has a triangle", {tri->begin(), tri->end()});
  if (d < 0) throw InvalidArgument("d must be non-negative");
  return fractional_chromatic(h, cap).value > Rational(boost::multiprecision::cpp_int(1) << d);
}

Graph BaseGraphSpec::build() const {
  if (kind == BaseKind::complete) {
    if (size < 1) throw InvalidArgument("complete base graph needs at least one vertex");
    return complete_graph(size);
  }
  if (t < 2) throw InvalidArgument("Mycielski base graphs need t >= 2");
  if (vertices.empty()) throw InvalidArgument("Mycielski base graph needs at least one vertex");
  return induced_subgraph(mycielski_graph(t - 1), vertices).graph;
}

void for_each_base_graph(int t, int complete_cap,
                         const std::function<void(const BaseGraphSpec&, const Graph&)>& visit) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  if (t == 1) {
    BaseGraphSpec k1;
    visit(k1, k1.build());
    return;
  }
  const Graph m = mycielski_graph(t - 1);
  const int size = m.vertex_count();
  if (size > 20) throw CapExceeded("M_" + std::to_string(t - 1) + " has too many induced subgraphs to enumerate");
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << size); ++mask) {
    BaseGraphSpec spec{BaseKind::mycielski_induced, t, {}, 0};
    for (int v = 0; v < size; ++v)
      if ((mask >> v) & 1) spec.vertices.push_back(v);
    visit(spec, induced_subgraph(m, spec.vertices).graph);
  }
  for (int k = 1; k <= complete_cap; ++k) {
    BaseGraphSpec spec{BaseKind::complete, 0, {}, k};
    visit(spec, complete_graph(k));
  }
}

Graph evaluate(const CStarRecipe& recipe) {
  switch (recipe.op) {
    case CStarRecipe::Op::base: return recipe.base.build();
    case CStarRecipe::Op::disjoint_union:
      if (recipe.children.size() != 2) throw InvalidArgument("union needs two operands");
      return disjoint_union(evaluate(recipe.children[0]), evaluate(recipe.children[1]));
    case CStarRecipe::Op::substitute:
      if (recipe.children.size() != 2) throw InvalidArgument("substitution needs two operands");
      return substitute(evaluate(recipe.children[0]), recipe.position, evaluate(recipe.children[1]));
  }
  throw InvalidArgument("unknown recipe operation");
}

nlohmann::json recipe_to_json(const CStarRecipe& recipe) {
  using nlohmann::json;
  switch (recipe.op) {
    case CStarRecipe::Op::base:
      if (recipe.base.kind == BaseKind::complete) return json{{"op", "complete"}, {"size", recipe.base.size}};
      return json{{"op", "mycielski_induced"}, {"t", recipe.base.t}, {"vertices", recipe.base.vertices}};
    case CStarRecipe::Op::disjoint_union:
      return json{{"op", "union"}, {"left", recipe_to_json(recipe.children.at(0))}, {"right", recipe_to_json(recipe.children.at(1))}};
    case CStarRecipe::Op::substitute:
      return json{{"op", "substitute"},
                  {"host", recipe_to_json(recipe.children.at(0))},
                  {"position", recipe.position},
                  {"guest", recipe_to_json(recipe.children.at(1))}};
  }
  return {};
}

CStarRecipe recipe_from_json(const nlohmann::json& j) {
  try {
    CStarRecipe r;
    const std::string op = j.at("op").get<std::string>();
    if (op == "complete") {
      r.base = {BaseKind::complete, 0, {}, j.at("size").get<int>()};
    } else if (op == "mycielski_induced") {
      r.base = {BaseKind::mycielski_induced, j.at("t").get<int>(), j.at("vertices").get<std::vector<int>>(), 0};
    } else if (op == "union") {
      r.op = CStarRecipe::Op::disjoint_union;
      r.children = {recipe_from_json(j.at("left")), recipe_from_json(j.at("right"))};
    } else if (op == "substitute") {
      r.op = CStarRecipe::Op::substitute;
      r.position = j.at("position").get<int>();
      r.children = {recipe_from_json(j.at("host")), recipe_from_json(j.at("guest"))};
    } else {
      throw InvalidArgument("unknown recipe op '" + op + "'");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed recipe: ") + e.what());
  }
}

namespace {

BaseGraphSpec random_base(int t, int room, const CStarOptions& options, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  if (t >= 2 && coin(rng)) {
    const int size = mycielski_graph(t - 1).vertex_count();
    std::vector<int> kept;
    for (int v = 0; v < size; ++v)
      if (coin(rng)) kept.push_back(v);
    while (static_cast<int>(kept.size()) > room) {
      std::uniform_int_distribution<std::size_t> pick(0, kept.size() - 1);
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pick(rng)));
    }
    if (kept.empty()) kept.push_back(std::uniform_int_distribution<int>(0, size - 1)(rng));
    return {BaseKind::mycielski_induced, t, kept, 0};
  }
  const int cap = t == 1 ? 1 : std::max(1, std::min(options.complete_cap, room));
  return {BaseKind::complete, 0, {}, std::uniform_int_distribution<int>(1, cap)(rng)};
}

CStarRecipe leaf(BaseGraphSpec spec) {
  CStarRecipe r;
  r.base = std::move(spec);
  return r;
}

}  // namespace

CStarSample sample_cstar(int t, std::uint64_t seed, int budget, const CStarOptions& options) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  if (budget < 1) throw CapExceeded("vertex budget exhausted before the first base graph");
  std::mt19937_64 rng(seed);
  std::geometric_distribution<int> steps_dist(options.stop_probability);
  std::bernoulli_distribution coin(0.5);

  CStarRecipe recipe = leaf(random_base(t, budget, options, rng));
  Graph g = evaluate(recipe);
  const int steps = steps_dist(rng);
  for (int step = 0; step < steps; ++step) {
    const int room = budget - g.vertex_count();
    if (room <= 0) break;
    const bool as_union = coin(rng);
    // a substitution grows the graph by |B| - 1
    BaseGraphSpec spec = random_base(t, as_union ? room : room + 1, options, rng);
    const Graph base = spec.build();
    CStarRecipe next;
    if (as_union) {
      next.op = CStarRecipe::Op::disjoint_union;
      next.children = {std::move(recipe), leaf(std::move(spec))};
      g = disjoint_union(g, base);
    } else if (coin(rng)) {
      next.op = CStarRecipe::Op::substitute;
      next.position = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
      next.children = {std::move(recipe), leaf(std::move(spec))};
      g = substitute(g, next.position, base);
    } else {
      if (g.vertex_count() + base.vertex_count() - 1 > budget) continue;
      next.op = CStarRecipe::Op::substitute;
      next.position = std::uniform_int_distribution<int>(0, base.vertex_count() - 1)(rng);
      next.children = {leaf(std::move(spec)), std::move(recipe)};
      g = substitute(base, next.position, g);
    }
    recipe = std::move(next);
  }

  CStarSample sample{g, std::move(recipe), {}};
  if (auto bull = find_bull(g)) throw CertificationError("closure sample contains a bull", {bull->begin(), bull->end()});
  sample.membership.bull_free = true;
  if (g.vertex_count() <= options.exact_membership_cap) {
    sample.membership.method = "exact";
    sample.membership.t_parameter = t_parameter(g, options.exact_membership_cap);
    if (sample.membership.t_parameter > t)
      throw CertificationError("closure sample has a triangle-free induced subgraph needing more than t colors");
  } else {
    sample.membership.method = "recipe";
  }
  sample.membership.in_class = true;
  return sample;
}

}  // namespace bullchrome
