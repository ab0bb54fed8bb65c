#include "qnd/extensions.hpp"

#include <array>
#include <string>

#include "qnd/enumeration.hpp"
#include "qnd/error.hpp"

namespace qnd {

TripleDomain::TripleDomain(Quandle base, Congruence r, Congruence s)
    : base_(std::move(base)), r_(std::move(r)), s_(std::move(s)) {
  auto const n = base_.order();
  if (r_.base_order() != n || s_.base_order() != n) {
    throw Error(ErrorKind::PreconditionFailed, {}, "congruences live on a different quandle");
  }
  index_.assign(n * n * n, -1);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (r_.related(x, y) && s_.related(y, z)) {
          index_[(x * n + y) * n + z] = static_cast<std::int64_t>(triples_.size());
          triples_.push_back({x, y, z});
        }
  auto const k = triples_.size();
  op_.resize(k * k);
  inv_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto const& t = triples_[i];
      auto const& u = triples_[j];
      auto fwd = index_of(base_.op(t.x, u.x), base_.op(t.y, u.y), base_.op(t.z, u.z));
      auto bwd = index_of(base_.op_inv(t.x, u.x), base_.op_inv(t.y, u.y), base_.op_inv(t.z, u.z));
      if (!fwd || !bwd) throw Error(ErrorKind::NotACongruence, {i, j}, "R ×_A S is not closed");
      op_[i * k + j] = *fwd;
      inv_[i * k + j] = *bwd;
    }
  }
}

std::optional<std::size_t> TripleDomain::index_of(Element x, Element y, Element z) const noexcept {
  auto const n = base_.order();
  auto const v = index_[(x * n + y) * n + z];
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

std::string_view to_string(ConnectorLaw law) noexcept {
  switch (law) {
    case ConnectorLaw::MaltsevLeft: return "maltsev_xxy";
    case ConnectorLaw::MaltsevRight: return "maltsev_xyy";
    case ConnectorLaw::MembershipS: return "membership_s";
    case ConnectorLaw::MembershipR: return "membership_r";
    case ConnectorLaw::AssociativityLeft: return "associativity_left";
    case ConnectorLaw::AssociativityRight: return "associativity_right";
    case ConnectorLaw::Homomorphism: return "homomorphism";
  }
  return "unknown";
}

std::optional<Element> Connector::at(Element x, Element y, Element z) const noexcept {
  auto const n = domain_->base().order();
  if (x >= n || y >= n || z >= n) return std::nullopt;
  auto idx = domain_->index_of(x, y, z);
  if (!idx) return std::nullopt;
  return values_[*idx];
}

namespace {

constexpr std::array kAllLaws{ConnectorLaw::MaltsevLeft,       ConnectorLaw::MaltsevRight,
                              ConnectorLaw::MembershipS,       ConnectorLaw::MembershipR,
                              ConnectorLaw::AssociativityLeft, ConnectorLaw::AssociativityRight,
                              ConnectorLaw::Homomorphism};

constexpr std::array kPartialLaws{ConnectorLaw::MaltsevLeft, ConnectorLaw::MaltsevRight,
                                  ConnectorLaw::Homomorphism};

bool law_holds(TripleDomain const& d, std::span<Element const> p, ConnectorLaw law) {
  auto const& a = d.base();
  auto const n = a.order();
  auto value = [&](Element x, Element y, Element z) -> std::optional<Element> {
    auto i = d.index_of(x, y, z);
    if (!i) return std::nullopt;
    return p[*i];
  };
  switch (law) {
    case ConnectorLaw::MaltsevLeft:
      for (std::size_t i = 0; i < d.size(); ++i) {
        auto const& t = d.triple(i);
        if (t.x == t.y && p[i] != t.z) return false;
      }
      return true;
    case ConnectorLaw::MaltsevRight:
      for (std::size_t i = 0; i < d.size(); ++i) {
        auto const& t = d.triple(i);
        if (t.y == t.z && p[i] != t.x) return false;
      }
      return true;
    case ConnectorLaw::MembershipS:
      for (std::size_t i = 0; i < d.size(); ++i)
        if (!d.s().related(d.triple(i).x, p[i])) return false;
      return true;
    case ConnectorLaw::MembershipR:
      for (std::size_t i = 0; i < d.size(); ++i)
        if (!d.r().related(d.triple(i).z, p[i])) return false;
      return true;
    case ConnectorLaw::AssociativityLeft:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element u = 0; u < n; ++u)
            for (Element v = 0; v < n; ++v) {
              auto inner = value(y, u, v);
              auto rhs = value(x, u, v);
              if (!inner || !rhs) continue;
              auto lhs = value(x, y, *inner);
              if (lhs && *lhs != *rhs) return false;
            }
      return true;
    case ConnectorLaw::AssociativityRight:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element u = 0; u < n; ++u)
            for (Element v = 0; v < n; ++v) {
              auto inner = value(x, y, u);
              auto rhs = value(x, y, v);
              if (!inner || !rhs) continue;
              auto lhs = value(*inner, u, v);
              if (lhs && *lhs != *rhs) return false;
            }
      return true;
    case ConnectorLaw::Homomorphism:
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
          if (p[d.op(i, j)] != a.op(p[i], p[j])) return false;
      return true;
  }
  return false;
}

}  // namespace

std::optional<ConnectorLaw> first_violated_law(TripleDomain const& domain, std::span<Element const> values,
                                               std::span<ConnectorLaw const> laws) {
  if (values.size() != domain.size()) return ConnectorLaw::Homomorphism;
  for (auto law : laws) {
    if (!law_holds(domain, values, law)) return law;
  }
  return std::nullopt;
}

std::optional<ConnectorLaw> first_violated_law(TripleDomain const& domain, std::span<Element const> values) {
  return first_violated_law(domain, values, kAllLaws);
}

bool in_sigma(Hom const& f, Hom const& s) {
  if (!(s.dom() == f.cod()) || !(s.cod() == f.dom())) {
    throw Error(ErrorKind::NotASection, {}, "section has the wrong domain or codomain");
  }
  for (Element b = 0; b < f.cod().order(); ++b) {
    if (f(s(b)) != b) throw Error(ErrorKind::NotASection, {b}, "f(s(b)) != b");
  }
  auto const& a = f.dom();
  for (Element x = 0; x < a.order(); ++x) {
    auto const b = f(x);
    bool reached = false;
    for (Element k = 0; k < a.order() && !reached; ++k) reached = f(k) == b && a.op(s(b), k) == x;
    if (!reached) return false;
  }
  return true;
}

bool is_sigma_special(Hom const& f) {
  return is_sigma_equivalence(f.dom(), kernel_congruence(f));
}

bool is_sigma_equivalence(Quandle const& q, Congruence const& s) {
  auto const n = q.order();
  for (Element a = 0; a < n; ++a) {
    for (Element a2 = 0; a2 < n; ++a2) {
      if (!s.related(a, a2)) continue;
      bool reached = false;
      for (Element k = 0; k < n && !reached; ++k) reached = s.related(a, k) && q.op(a, k) == a2;
      if (!reached) return false;
    }
  }
  return true;
}

Element sigma_witness(Hom const& f, Element a, Element a_prime) {
  auto const& q = f.dom();
  if (a >= q.order() || a_prime >= q.order() || f(a) != f(a_prime)) {
    throw Error(ErrorKind::PreconditionFailed, {a, a_prime}, "elements are not in the same fiber");
  }
  if (!is_symmetric(fiber_subquandle(f, f(a)).quandle)) {
    throw Error(ErrorKind::PreconditionFailed, {a, a_prime}, "fiber is not symmetric");
  }
  auto const k = q.op_inv(a_prime, a);
  if (f(k) != f(a) || q.op(a, k) != a_prime) {
    throw InvariantViolation("sigma witness does not solve a ◁ k = a'");
  }
  return k;
}

std::optional<Connector> connector_candidate_formula(Hom const& f) {
  if (!has_abelian_symmetric_fibers(f)) {
    throw Error(ErrorKind::PreconditionFailed, {}, "fibers are not abelian symmetric");
  }
  auto const& a = f.dom();
  auto const n = a.order();
  auto domain = std::make_shared<TripleDomain const>(a, Congruence::full(n), kernel_congruence(f));
  std::vector<Element> values(domain->size());
  for (std::size_t i = 0; i < domain->size(); ++i) {
    auto const [x, y, z] = domain->triple(i);
    std::optional<Element> k;
    for (Element c = 0; c < n; ++c) {
      if (f(c) != f(y) || a.op(y, c) != z) continue;
      if (k) throw Error(ErrorKind::PreconditionFailed, {y, z}, "k_c is not unique");
      k = c;
    }
    if (!k) throw Error(ErrorKind::PreconditionFailed, {y, z}, "no k_c with b ◁ k_c = c");
    values[i] = a.op(a.op_inv(x, y), *k);
  }
  if (first_violated_law(*domain, values)) return std::nullopt;
  return Connector(std::move(domain), std::move(values));
}

namespace {

class ConnectorSearcher {
 public:
  ConnectorSearcher(std::shared_ptr<TripleDomain const> domain, ConnectorSearchOptions options)
      : domain_(std::move(domain)), d_(*domain_), a_(d_.base()), options_(options) {
    auto const n = a_.order();
    allowed_.assign(d_.size() * n, 1);
    if (full()) {
      for (std::size_t i = 0; i < d_.size(); ++i) {
        auto const& t = d_.triple(i);
        for (Element v = 0; v < n; ++v) allowed_[i * n + v] = d_.s().related(t.x, v) && d_.r().related(t.z, v);
      }
    }
  }

  std::vector<Connector> run() {
    State s(d_.size(), -1);
    std::vector<std::size_t> work;
    for (std::size_t i = 0; i < d_.size(); ++i) {
      auto const& t = d_.triple(i);
      if (t.x == t.y && !set(s, i, t.z, work)) return {};
      if (t.y == t.z && !set(s, i, t.x, work)) return {};
    }
    if (propagate(s, work)) recurse(s);
    return std::move(found_);
  }

 private:
  using State = std::vector<std::int64_t>;

  bool full() const { return options_.laws == ConnectorLaws::Full; }
  bool done() const { return options_.limit != 0 && found_.size() >= options_.limit; }

  bool set(State& s, std::size_t t, Element v, std::vector<std::size_t>& work) const {
    if (s[t] >= 0) return static_cast<Element>(s[t]) == v;
    if (!allowed_[t * a_.order() + v]) return false;
    s[t] = v;
    work.push_back(t);
    return true;
  }

  // p(lhs) and p(rhs) must agree.
  bool link(State& s, std::optional<std::size_t> lhs, std::size_t rhs, std::vector<std::size_t>& work) const {
    if (!lhs) return false;  // membership guarantees the triple exists
    if (s[*lhs] >= 0) return set(s, rhs, static_cast<Element>(s[*lhs]), work);
    if (s[rhs] >= 0) return set(s, *lhs, static_cast<Element>(s[rhs]), work);
    return true;
  }

  bool propagate(State& s, std::vector<std::size_t>& work) const {
    auto const k = d_.size();
    auto const n = a_.order();
    while (true) {
      while (!work.empty()) {
        auto const t = work.back();
        work.pop_back();
        auto const pt = static_cast<Element>(s[t]);
        for (std::size_t u = 0; u < k; ++u) {
          if (s[u] < 0) continue;
          auto const pu = static_cast<Element>(s[u]);
          if (!set(s, d_.op(t, u), a_.op(pt, pu), work) || !set(s, d_.op(u, t), a_.op(pu, pt), work) ||
              !set(s, d_.op_inv(t, u), a_.op_inv(pt, pu), work) ||
              !set(s, d_.op_inv(u, t), a_.op_inv(pu, pt), work)) {
            return false;
          }
        }
      }
      if (!full()) return true;
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element u = 0; u < n; ++u)
            for (Element v = 0; v < n; ++v) {
              // p(x, y, p(y, u, v)) = p(x, u, v)
              if (auto rhs = d_.index_of(x, u, v)) {
                if (auto inner = d_.index_of(y, u, v); inner && s[*inner] >= 0) {
                  if (!link(s, d_.index_of(x, y, static_cast<Element>(s[*inner])), *rhs, work)) return false;
                }
              }
              // p(p(x, y, u), u, v) = p(x, y, v)
              if (auto rhs = d_.index_of(x, y, v)) {
                if (auto inner = d_.index_of(x, y, u); inner && s[*inner] >= 0 && d_.s().related(u, v)) {
                  if (!link(s, d_.index_of(static_cast<Element>(s[*inner]), u, v), *rhs, work)) return false;
                }
              }
            }
      if (work.empty()) return true;
    }
  }

  void recurse(State const& s) {
    if (done()) return;
    std::size_t next = 0;
    while (next < s.size() && s[next] >= 0) ++next;
    if (next == s.size()) {
      std::vector<Element> values(s.begin(), s.end());
      auto const violated = full() ? first_violated_law(d_, values)
                                   : first_violated_law(d_, values, kPartialLaws);
      if (!violated) found_.emplace_back(domain_, std::move(values));
      return;
    }
    for (Element v = 0; v < a_.order() && !done(); ++v) {
      State child = s;
      std::vector<std::size_t> work;
      if (set(child, next, v, work) && propagate(child, work)) recurse(child);
    }
  }

  std::shared_ptr<TripleDomain const> domain_;
  TripleDomain const& d_;
  Quandle const& a_;
  ConnectorSearchOptions options_;
  std::vector<char> allowed_;
  std::vector<Connector> found_;
};

void require_surjective(Hom const& f) {
  if (!is_surjective(f)) throw Error(ErrorKind::NotSurjective, {}, "an extension must be surjective");
}

}  // namespace

std::vector<Connector> search_connectors(Quandle const& a, Congruence const& r, Congruence const& s,
                                         ConnectorSearchOptions options) {
  auto domain = std::make_shared<TripleDomain const>(a, r, s);
  return ConnectorSearcher(std::move(domain), options).run();
}

std::optional<Connector> connector_search(Quandle const& a, Congruence const& r, Congruence const& s) {
  auto found = search_connectors(a, r, s, {ConnectorLaws::Full, 1});
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

bool is_algebraically_central(Hom const& f) {
  require_surjective(f);
  if (has_abelian_symmetric_fibers(f)) {
    // Σ-special, so a connector is unique and must be the formula.
    try {
      return connector_candidate_formula(f).has_value();
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::PreconditionFailed) throw;
    }
  }
  return connector_search(f.dom(), Congruence::full(f.dom().order()), kernel_congruence(f)).has_value();
}

bool is_normal_extension(Hom const& f) {
  require_surjective(f);
  return is_trivial_extension(kernel_pair(f).proj1);
}

std::optional<Hom> find_central_witness(Hom const& f, std::size_t bound) {
  require_surjective(f);
  auto trivial_along = [&](Hom const& p) { return is_trivial_extension(pullback(f, p).proj1); };
  if (trivial_along(f)) return f;
  auto const& b = f.cod();
  for (std::size_t k = b.order(); k <= bound; ++k) {
    for (auto const& e : census(k).representatives) {
      for (auto const& p : enumerate_surjections(e, b)) {
        if (trivial_along(p)) return p;
      }
    }
  }
  return std::nullopt;
}

CentralityResult is_central_extension(Hom const& f, std::size_t witness_bound) {
  require_surjective(f);
  CentralityResult out;
  out.central = has_abelian_symmetric_fibers(f) && is_algebraically_central(f);
  if (out.central && witness_bound > 0) out.witness = find_central_witness(f, witness_bound);
  return out;
}

std::optional<Decomposition> decompose_kernel_pair(Hom const& f) {
  require_surjective(f);
  auto const kp = kernel_pair(f);
  auto const total = kp.carrier().order(), n = f.dom().order();
  if (total % n != 0) return std::nullopt;
  auto const k = total / n;
  if (k > kMaxCensusOrder) {
    throw Error(ErrorKind::OrderTooLarge, {k}, "decomposition factor beyond the census range");
  }
  for (auto const& q : census(k).representatives) {
    if (auto iso = are_isomorphic(kp.carrier(), product(q, f.dom()))) {
      return Decomposition{q, std::move(*iso)};
    }
  }
  return std::nullopt;
}

ExtensionReport classify(Hom const& f) {
  ExtensionReport r;
  r.surjective = is_surjective(f);
  r.fibers_abelian_symmetric = has_abelian_symmetric_fibers(f);
  r.sigma_special = is_sigma_special(f);
  for (auto const& fiber : fibers(f)) r.eq_f_order += fiber.size() * fiber.size();
  if (!r.surjective) return r;

  bool const ac = is_algebraically_central(f);
  bool const trivial = is_trivial_extension(f);
  bool const normal = is_normal_extension(f);
  bool const central = ac && r.fibers_abelian_symmetric;
  r.algebraically_central = ac;
  r.trivial = trivial;
  r.normal = normal;
  r.central = central;

  auto describe = [&] {
    std::string map;
    for (auto x : f.map()) map += std::to_string(x) + ' ';
    return "map [ " + map + "]: ac=" + std::to_string(ac) + " fibers=" +
           std::to_string(r.fibers_abelian_symmetric) + " normal=" + std::to_string(normal) +
           " trivial=" + std::to_string(trivial);
  };
  if (central != normal) throw InvariantViolation("central and normal disagree: " + describe());
  if (trivial && !central) throw InvariantViolation("trivial extension that is not central: " + describe());
  if (central) {
    auto decomposition = decompose_kernel_pair(f);
    if (!decomposition) throw InvariantViolation("central extension whose kernel pair does not split: " + describe());
    r.decomposition_factor = decomposition->factor;
  }
  return r;
}

}  // namespace qnd
