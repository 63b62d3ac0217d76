#include "multilap/multicomplex.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace multilap {

namespace {

std::vector<std::size_t> positions(const VariableOrder& order, std::size_t n) {
  if (order.size() != n) throw DimensionMismatch("variable order has wrong length");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || pos[order[k]] != n) throw InvalidArgument("not a permutation");
    pos[order[k]] = k;
  }
  return pos;
}

void checkPermutation(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw InvalidArgument("not a permutation");
    seen[p] = true;
  }
}

std::vector<std::size_t> variablesPresent(const Multicomplex& m) {
  std::vector<std::size_t> vars;
  for (const auto& v : m.layer(1)) {
    for (std::size_t i = 0; i < v.ambientDim(); ++i) {
      if (v[i] == 1) vars.push_back(i);
    }
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

bool shiftedImpl(const Multicomplex& m, const VariableOrder& order, bool simplicial) {
  const auto n = m.ambientDim();
  const auto pos = positions(order, n);
  const auto present = variablesPresent(m);
  for (Degree d = 1; d <= m.maxDegree(); ++d) {
    for (const auto& t : m.layer(d)) {
      for (std::size_t j = 0; j < n; ++j) {
        if (t[j] == 0) continue;
        const Monomial base = t.dividedByVariable(j);
        for (std::size_t i : present) {
          if (pos[i] >= pos[j]) continue;
          if (simplicial && base[i] > 0) continue;
          if (!m.contains(base.timesVariable(i))) return false;
        }
      }
    }
  }
  return true;
}

void closeUnderDivisors(std::unordered_set<Monomial>& set) {
  std::vector<Monomial> stack(set.begin(), set.end());
  while (!stack.empty()) {
    Monomial t = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < t.ambientDim(); ++i) {
      if (t[i] == 0) continue;
      auto d = t.dividedByVariable(i);
      if (set.insert(d).second) stack.push_back(std::move(d));
    }
  }
}

}  // namespace

NotDivisorClosed::NotDivisorClosed(Monomial missing, Monomial member)
    : Error("not divisor-closed: " + formatSymbolic(missing) + " divides " +
            formatSymbolic(member) + " but is missing"),
      missing_(std::move(missing)),
      member_(std::move(member)) {}

VariableOrder naturalOrder(std::size_t n) {
  VariableOrder o(n);
  std::iota(o.begin(), o.end(), std::size_t{0});
  return o;
}

VariableOrder reverseOrder(std::size_t n) {
  VariableOrder o = naturalOrder(n);
  std::reverse(o.begin(), o.end());
  return o;
}

Multicomplex::Multicomplex(std::vector<std::vector<Monomial>> layers, std::size_t ambientDim)
    : ambientDim_(ambientDim), layers_(std::move(layers)) {
  for (auto& l : layers_) {
    std::sort(l.begin(), l.end(), BasisLess{});
    for (std::size_t k = 0; k < l.size(); ++k) index_.emplace(l[k], k);
  }
}

Multicomplex Multicomplex::fromMonomials(std::span<const Monomial> monomials,
                                         std::size_t ambientDim, std::uint64_t degreeCap) {
  std::unordered_set<Monomial> set;
  for (const auto& m : monomials) {
    if (m.ambientDim() != ambientDim) {
      throw DimensionMismatch("monomial " + formatExponents(m) + " is not in " +
                              std::to_string(ambientDim) + " variables");
    }
    if (totalDegree(m) > degreeCap) {
      throw DegreeOverflow("total degree " + std::to_string(totalDegree(m)) + " exceeds cap " +
                           std::to_string(degreeCap));
    }
    set.insert(m);
  }
  std::vector<Monomial> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end(), BasisLess{});
  for (const auto& t : sorted) {
    for (std::size_t i = 0; i < ambientDim; ++i) {
      if (t[i] == 0) continue;
      auto d = t.dividedByVariable(i);
      if (!set.contains(d)) throw NotDivisorClosed(std::move(d), t);
    }
  }
  std::vector<std::vector<Monomial>> layers;
  for (auto& t : sorted) {
    const auto deg = static_cast<std::size_t>(totalDegree(t));
    if (layers.size() <= deg) layers.resize(deg + 1);
    layers[deg].push_back(std::move(t));
  }
  return Multicomplex(std::move(layers), ambientDim);
}

Multicomplex Multicomplex::divisorClosure(std::span<const Monomial> monomials,
                                          std::size_t ambientDim, std::uint64_t degreeCap) {
  std::unordered_set<Monomial> set;
  for (const auto& m : monomials) {
    if (m.ambientDim() != ambientDim) throw DimensionMismatch("monomial has wrong length");
    if (totalDegree(m) > degreeCap) throw DegreeOverflow("total degree exceeds cap");
    set.insert(m);
  }
  closeUnderDivisors(set);
  std::vector<Monomial> all(set.begin(), set.end());
  return fromMonomials(all, ambientDim, degreeCap);
}

std::span<const Monomial> Multicomplex::layer(Degree d) const {
  if (d < 0 || d > maxDegree()) return {};
  return layers_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> Multicomplex::indexInLayer(const Monomial& m) const {
  if (auto it = index_.find(m); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<Monomial> Multicomplex::monomials() const {
  std::vector<Monomial> all;
  all.reserve(size());
  for (const auto& l : layers_) all.insert(all.end(), l.begin(), l.end());
  return all;
}

bool Multicomplex::isSimplicial() const {
  return std::all_of(index_.begin(), index_.end(),
                     [](const auto& kv) { return isSquareFree(kv.first); });
}

std::span<const Monomial> layer(const Multicomplex& m, Degree d) { return m.layer(d); }

std::vector<std::size_t> fVector(const Multicomplex& m) {
  std::vector<std::size_t> f;
  for (Degree d = 0; d <= m.maxDegree(); ++d) f.push_back(m.layer(d).size());
  return f;
}

bool isShifted(const Multicomplex& m, const VariableOrder& order) {
  return shiftedImpl(m, order, false);
}

bool isShifted(const Multicomplex& m) { return isShifted(m, naturalOrder(m.ambientDim())); }

bool isShiftedSimplicial(const Multicomplex& m, const VariableOrder& order) {
  return shiftedImpl(m, order, true);
}

bool admitsShiftedFormula(const Multicomplex& m, const VariableOrder& order) {
  if (isShifted(m, order)) return true;
  return m.isSimplicial() && isShiftedSimplicial(m, order);
}

ConstituentDecomposition constituents(const Multicomplex& m) {
  std::map<Monomial, std::vector<Monomial>, BasisLess> groups;
  for (Degree d = 0; d <= m.maxDegree(); ++d) {
    for (const auto& t : m.layer(d)) {
      auto [p, q] = squareDecompose(t);
      groups[std::move(p)].push_back(std::move(q));
    }
  }
  ConstituentDecomposition out;
  out.reserve(groups.size());
  for (auto& [p, qs] : groups) {
    out.push_back({p, Multicomplex::fromMonomials(qs, m.ambientDim())});
  }
  return out;
}

std::vector<std::size_t> degreeSequence(const Multicomplex& n, Degree k) {
  std::vector<std::size_t> d(n.ambientDim(), 0);
  for (const auto& t : n.layer(k)) {
    for (std::size_t j = 0; j < t.ambientDim(); ++j) {
      if (t[j] > 0) ++d[j];
    }
  }
  return d;
}

std::vector<Monomial> complementIdealGenerators(const Multicomplex& m, Degree throughDegree) {
  if (throughDegree < m.maxDegree() + 1) {
    throw InvalidArgument("degree bound " + std::to_string(throughDegree) +
                          " is below maxDegree + 1");
  }
  const auto n = m.ambientDim();
  if (m.empty()) return {Monomial::unit(n)};
  std::unordered_set<Monomial> gens;
  for (Degree d = 0; d <= m.maxDegree() && d < throughDegree; ++d) {
    for (const auto& t : m.layer(d)) {
      for (std::size_t i = 0; i < n; ++i) {
        auto u = t.timesVariable(i);
        if (m.contains(u) || gens.contains(u)) continue;
        bool minimal = true;
        for (std::size_t k = 0; k < n && minimal; ++k) {
          if (u[k] > 0 && !m.contains(u.dividedByVariable(k))) minimal = false;
        }
        if (minimal) gens.insert(std::move(u));
      }
    }
  }
  std::vector<Monomial> out(gens.begin(), gens.end());
  std::sort(out.begin(), out.end(), BasisLess{});
  return out;
}

std::vector<Monomial> complementIdealGenerators(const Multicomplex& m) {
  return complementIdealGenerators(m, m.maxDegree() + 1);
}

bool isStronglyStable(std::span<const Monomial> gens, const VariableOrder& order) {
  if (gens.empty()) return true;
  const auto n = gens.front().ambientDim();
  const auto pos = positions(order, n);
  auto inIdeal = [&](const Monomial& s) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, s); });
  };
  for (const auto& g : gens) {
    if (g.ambientDim() != n) throw DimensionMismatch("generators have different lengths");
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] == 0) continue;
      const auto base = g.dividedByVariable(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (pos[j] < pos[i] && !inIdeal(base.timesVariable(j))) return false;
      }
    }
  }
  return true;
}

bool isStronglyStable(std::span<const Monomial> gens) {
  if (gens.empty()) return true;
  return isStronglyStable(gens, naturalOrder(gens.front().ambientDim()));
}

Monomial relabel(const Monomial& m, std::span<const std::size_t> perm) {
  if (perm.size() != m.ambientDim()) throw DimensionMismatch("permutation has wrong length");
  std::vector<Exponent> e(m.ambientDim());
  for (std::size_t i = 0; i < e.size(); ++i) e[perm[i]] = m[i];
  return Monomial(std::move(e));
}

Multicomplex relabel(const Multicomplex& m, std::span<const std::size_t> perm) {
  checkPermutation(perm);
  if (perm.size() != m.ambientDim()) throw DimensionMismatch("permutation has wrong length");
  std::vector<Monomial> out;
  out.reserve(m.size());
  for (const auto& t : m.monomials()) out.push_back(relabel(t, perm));
  return Multicomplex::fromMonomials(out, m.ambientDim());
}

VariableOrder relabel(const VariableOrder& order, std::span<const std::size_t> perm) {
  checkPermutation(perm);
  if (perm.size() != order.size()) throw DimensionMismatch("permutation has wrong length");
  VariableOrder out(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) out[k] = perm[order[k]];
  return out;
}

Multicomplex shiftedClosure(std::span<const Monomial> seed, std::size_t ambientDim,
                            const VariableOrder& order) {
  const auto pos = positions(order, ambientDim);
  std::unordered_set<Monomial> set;
  for (const auto& m : seed) {
    if (m.ambientDim() != ambientDim) throw DimensionMismatch("monomial has wrong length");
    set.insert(m);
  }
  closeUnderDivisors(set);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> present;
    for (std::size_t i = 0; i < ambientDim; ++i) {
      if (set.contains(Monomial::variable(ambientDim, i))) present.push_back(i);
    }
    std::vector<Monomial> snapshot(set.begin(), set.end());
    std::unordered_set<Monomial> added;
    for (const auto& t : snapshot) {
      for (std::size_t j = 0; j < ambientDim; ++j) {
        if (t[j] == 0) continue;
        const auto base = t.dividedByVariable(j);
        for (std::size_t i : present) {
          if (pos[i] >= pos[j]) continue;
          auto u = base.timesVariable(i);
          if (!set.contains(u)) added.insert(std::move(u));
        }
      }
    }
    if (!added.empty()) {
      changed = true;
      set.insert(added.begin(), added.end());
      closeUnderDivisors(set);
    }
  }
  std::vector<Monomial> all(set.begin(), set.end());
  return Multicomplex::fromMonomials(all, ambientDim);
}

ParsedMonomials parseMonomialList(std::istream& in, InputSyntax syntax) {
  ParsedMonomials out;
  std::optional<std::size_t> declared;
  std::string line;
  std::size_t lineNo = 0;
  bool sawMonomial = false;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string first;
    if (!(probe >> first)) continue;
    if (first == "vars") {
      if (declared || sawMonomial) throw ParseError(lineNo, "'vars' must be the first entry");
      long long n = -1;
      std::string extra;
      if (!(probe >> n) || n < 0 || (probe >> extra)) throw ParseError(lineNo, "bad 'vars' line");
      declared = static_cast<std::size_t>(n);
      continue;
    }
    try {
      Monomial m = syntax == InputSyntax::Exponents ? parseExponents(line)
                                                    : parseSymbolic(line, declared.value_or(0));
      if (syntax == InputSyntax::Exponents) {
        const auto expect = declared ? *declared
                                     : (sawMonomial ? out.ambientDim : m.ambientDim());
        if (m.ambientDim() != expect) {
          throw ParseError(lineNo, "expected " + std::to_string(expect) + " exponents, got " +
                                       std::to_string(m.ambientDim()));
        }
        out.ambientDim = expect;
      } else {
        out.ambientDim = std::max(out.ambientDim, m.ambientDim());
      }
      out.monomials.push_back(std::move(m));
      sawMonomial = true;
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(lineNo, e.what());
    }
  }
  if (declared) out.ambientDim = *declared;
  if (syntax == InputSyntax::Symbolic) {
    // pad to the common variable count
    for (auto& m : out.monomials) {
      if (m.ambientDim() < out.ambientDim) {
        std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
        e.resize(out.ambientDim, 0);
        m = Monomial(std::move(e));
      }
    }
  }
  return out;
}

Multicomplex readMulticomplex(std::istream& in, InputSyntax syntax) {
  auto parsed = parseMonomialList(in, syntax);
  return Multicomplex::fromMonomials(parsed.monomials, parsed.ambientDim);
}

void writeMulticomplex(std::ostream& out, const Multicomplex& m) {
  out << "vars " << m.ambientDim() << '\n';
  for (const auto& t : m.monomials()) out << formatExponents(t) << '\n';
}

}  // namespace multilap
