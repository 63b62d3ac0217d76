#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "multilap/chain.hpp"
#include "multilap/dirichlet.hpp"
#include "multilap/formula.hpp"
#include "multilap/random.hpp"

namespace multilap::cli {

namespace {

using nlohmann::json;

// 12 significant digits, so reports do not depend on solver round-off.
double canonical(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json spectrumJson(const Spectrum& s) {
  json a = json::array();
  for (double v : s.values()) a.push_back(canonical(v));
  return a;
}

json snappedJson(const Spectrum& s) {
  if (auto snapped = s.snapped()) return *snapped;
  return nullptr;
}

json partitionJson(const Partition& p) { return std::vector<std::uint64_t>(p.parts().begin(), p.parts().end()); }

json monomialJson(const Monomial& m) {
  return std::vector<Exponent>(m.exponents().begin(), m.exponents().end());
}

template <typename Seq>
std::string joined(const Seq& seq) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : seq) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
  return out.str();
}

const char* yesNo(bool b) { return b ? "yes" : "no"; }

void emitJson(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Loaded {
  Multicomplex complex;
  VariableOrder order;
};

ParsedMonomials readInput(const RunConfig& config) {
  const auto syntax = config.symbolic ? InputSyntax::Symbolic : InputSyntax::Exponents;
  if (config.input == "-") return parseMonomialList(std::cin, syntax);
  std::ifstream in(config.input);
  if (!in) throw InvalidArgument("cannot open '" + config.input + "'");
  return parseMonomialList(in, syntax);
}

Loaded load(const RunConfig& config) {
  auto parsed = readInput(config);
  auto m = Multicomplex::fromMonomials(parsed.monomials, parsed.ambientDim);
  auto order = config.reverseOrder ? reverseOrder(m.ambientDim()) : naturalOrder(m.ambientDim());
  if (config.relabelSeed) {
    Rng rng(*config.relabelSeed);
    const auto perm = randomPermutation(rng, m.ambientDim());
    m = relabel(m, perm);
    order = relabel(order, perm);
  }
  return {std::move(m), std::move(order)};
}

std::vector<Degree> requestedDegrees(const RunConfig& config, const Multicomplex& m) {
  if (config.degree) {
    if (*config.degree < 0) throw InvalidArgument("--degree must be non-negative");
    return {*config.degree};
  }
  std::vector<Degree> all;
  for (Degree d = 0; d <= m.maxDegree(); ++d) all.push_back(d);
  return all;
}

}  // namespace

int runCheck(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto parsed = readInput(config);
  std::optional<Multicomplex> complex;
  std::optional<NotDivisorClosed> failure;
  try {
    complex = Multicomplex::fromMonomials(parsed.monomials, parsed.ambientDim);
  } catch (const NotDivisorClosed& e) {
    failure = e;
  }
  json j;
  j["vars"] = parsed.ambientDim;
  j["divisor_closed"] = complex.has_value();
  if (failure) {
    j["witness"] = {{"missing", monomialJson(failure->missing())},
                    {"member", monomialJson(failure->member())}};
    if (config.output == OutputMode::Json) {
      emitJson(out, j);
    } else {
      out << "vars: " << parsed.ambientDim << '\n'
          << "divisor-closed: no\n"
          << "witness: " << formatSymbolic(failure->missing()) << " divides "
          << formatSymbolic(failure->member()) << " but is missing\n";
    }
    err << "error: " << failure->what() << '\n';
    return kExitInvalid;
  }
  const auto& m = *complex;
  const auto n = m.ambientDim();
  const auto gens = complementIdealGenerators(m);
  const bool shiftedNatural = isShifted(m, naturalOrder(n));
  const bool shiftedReverse = isShifted(m, reverseOrder(n));
  const bool stableNatural = isStronglyStable(gens, naturalOrder(n));
  const bool stableReverse = isStronglyStable(gens, reverseOrder(n));
  if (config.output == OutputMode::Json) {
    j["monomials"] = m.size();
    j["max_degree"] = m.maxDegree();
    j["f_vector"] = fVector(m);
    j["simplicial"] = m.isSimplicial();
    j["shifted_natural"] = shiftedNatural;
    j["shifted_reverse"] = shiftedReverse;
    json g = json::array();
    for (const auto& x : gens) g.push_back(monomialJson(x));
    j["complement_generators"] = g;
    j["strongly_stable_natural"] = stableNatural;
    j["strongly_stable_reverse"] = stableReverse;
    emitJson(out, j);
  } else {
    out << "vars: " << n << '\n'
        << "monomials: " << m.size() << '\n'
        << "max degree: " << m.maxDegree() << '\n'
        << "f-vector: " << joined(fVector(m)) << '\n'
        << "divisor-closed: yes\n"
        << "simplicial: " << yesNo(m.isSimplicial()) << '\n'
        << "shifted (natural): " << yesNo(shiftedNatural) << '\n'
        << "shifted (reverse): " << yesNo(shiftedReverse) << '\n'
        << "complement ideal generators:";
    for (const auto& x : gens) out << ' ' << formatSymbolic(x);
    out << '\n'
        << "strongly stable (natural): " << yesNo(stableNatural) << '\n'
        << "strongly stable (reverse): " << yesNo(stableReverse) << '\n';
  }
  return kExitOk;
}

int runMatrix(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (!config.degree) throw InvalidArgument("matrix needs --degree");
  const auto loaded = load(config);
  const auto b = boundaryMatrix(loaded.complex, *config.degree);
  if (config.output == OutputMode::Json) {
    json j;
    j["rows"] = b.rows();
    j["cols"] = b.cols();
    j["degree"] = b.degree;
    json rows = json::array(), cols = json::array(), entries = json::array();
    for (const auto& r : b.rowBasis) rows.push_back(monomialJson(r));
    for (const auto& c : b.colBasis) cols.push_back(monomialJson(c));
    const auto byRow = b.entries.transpose();
    for (std::size_t r = 0; r < byRow.cols(); ++r) {
      for (const auto& e : byRow.column(r)) entries.push_back({r, e.index, e.value});
    }
    j["row_basis"] = rows;
    j["col_basis"] = cols;
    j["entries"] = entries;
    emitJson(out, j);
  } else {
    writeMatrixDump(out, b);
  }
  return kExitOk;
}

int runSpectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!(config.tol > 0)) throw InvalidArgument("--tol must be positive");
  const auto loaded = load(config);
  const auto& m = loaded.complex;
  const bool wantEig = config.method != Method::Formula;
  const bool wantFormula = config.method != Method::Eig;
  const bool verified = admitsShiftedFormula(m, loaded.order);
  if (wantFormula && !verified && !config.force) {
    throw NotShifted("multicomplex is not shifted under the " +
                     std::string(config.reverseOrder ? "reverse" : "natural") +
                     " order; pass --force to evaluate the formula anyway");
  }
  const FormulaOptions options{loaded.order, true};
  const auto betti = wantEig ? bettiNumbers(m) : std::vector<std::size_t>{};

  int status = kExitOk;
  json reports = json::array();
  std::ostringstream text;
  for (Degree k : requestedDegrees(config, m)) {
    json r;
    r["degree"] = k;
    r["chain_degree"] = k;
    r["laplacian_index"] = k - 1;
    text << "degree " << k << "  (boundary d_" << k << " d_" << k << "^T = L'_" << k - 1
         << ")\n";
    std::optional<Spectrum> boundary;
    if (wantEig) {
      const auto up = spectrumUp(m, k);
      const auto down = spectrumDown(m, k);
      const auto total = spectrumTotal(m, k);
      boundary = boundarySpectrum(m, k);
      const auto relations = verifySpectrumRelations(m, k, config.tol);
      const auto b = static_cast<std::size_t>(k) < betti.size() ? betti[k] : 0;
      r["up"] = spectrumJson(up);
      r["down"] = spectrumJson(down);
      r["total"] = spectrumJson(total);
      r["boundary"] = spectrumJson(*boundary);
      r["up_snapped"] = snappedJson(up);
      r["down_snapped"] = snappedJson(down);
      r["total_snapped"] = snappedJson(total);
      r["boundary_snapped"] = snappedJson(*boundary);
      r["betti"] = b;
      r["relations_ok"] = relations.ok;
      text << "  up    (L'_" << k << "):  " << formatSpectrum(up) << '\n'
           << "  down  (L''_" << k << "): " << formatSpectrum(down) << '\n'
           << "  total (L_" << k << "):   " << formatSpectrum(total) << '\n'
           << "  boundary:      " << formatSpectrum(*boundary) << '\n'
           << "  betti:         " << b << '\n'
           << "  relations:     " << (relations.ok ? "ok" : "FAILED") << '\n';
      for (const auto& f : relations.failures) text << "    " << f << '\n';
      if (!relations.ok) status = kExitMismatch;
    }
    if (wantFormula) {
      const auto formula = formulaSpectrum(m, k, options);
      const auto master = masterSpectrum(m, k, options);
      r["formula"] = partitionJson(formula);
      r["master"] = partitionJson(master);
      r["formula_verified"] = verified;
      text << "  formula:       " << formatPartition(formula) << '\n'
           << "  constituents:  " << formatPartition(master) << '\n';
      if (!verified) text << "  (formula forced on a non-shifted multicomplex)\n";
      if (wantEig) {
        const bool match = formula == master && matchesUpToZeros(formula, *boundary, config.tol);
        r["match_up_to_zeros"] = match;
        text << "  match:         " << yesNo(match) << '\n';
        if (!match && verified) status = kExitMismatch;
      }
    }
    reports.push_back(std::move(r));
  }
  if (config.output == OutputMode::Json) {
    emitJson(out, config.degree ? reports.at(0) : reports);
  } else {
    out << text.str();
  }
  if (status != kExitOk) err << "error: spectrum self-check failed\n";
  return status;
}

int runDecompose(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto loaded = load(config);
  const auto& m = loaded.complex;
  const auto parts = constituents(m);
  const auto f = fVector(m);
  std::vector<std::size_t> assembled(f.size(), 0);
  json list = json::array();
  std::ostringstream text;
  text << "constituents: " << parts.size() << '\n';
  for (const auto& c : parts) {
    const auto shift = static_cast<std::size_t>(2 * totalDegree(c.root));
    const auto cf = fVector(c.complex);
    for (std::size_t i = 0; i < cf.size(); ++i) {
      if (i + shift < assembled.size()) {
        assembled[i + shift] += cf[i];
      } else {
        assembled.push_back(cf[i]);  // cannot happen for a valid decomposition
      }
    }
    json entry;
    entry["root"] = monomialJson(c.root);
    entry["root_symbolic"] = formatSymbolic(c.root);
    entry["f_vector"] = cf;
    json mons = json::array();
    for (const auto& q : c.complex.monomials()) mons.push_back(monomialJson(q));
    entry["monomials"] = mons;
    list.push_back(std::move(entry));
    text << "p = " << formatSymbolic(c.root) << "  f = (" << joined(cf) << ")  {";
    bool first = true;
    for (const auto& q : c.complex.monomials()) {
      text << (first ? "" : ", ") << formatSymbolic(q);
      first = false;
    }
    text << "}\n";
  }
  const bool ok = assembled == f;
  text << "f-vector: (" << joined(f) << ")\n"
       << "f-vector identity: " << (ok ? "ok" : "FAILED") << '\n';
  if (config.output == OutputMode::Json) {
    emitJson(out, {{"constituents", list}, {"f_vector", f}, {"f_vector_identity", ok}});
  } else {
    out << text.str();
  }
  if (!ok) {
    err << "error: f-vector identity failed\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int runBetti(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto loaded = load(config);
  const auto& m = loaded.complex;
  const auto betti = bettiNumbers(m);
  const auto harmonic = harmonicDimensions(m);
  const auto split = bettiFromConstituents(m);
  const bool ok = betti == harmonic && betti == split;
  if (config.output == OutputMode::Json) {
    emitJson(out, {{"betti", betti},
                   {"laplacian_zero_multiplicity", harmonic},
                   {"constituent_split", split},
                   {"consistent", ok}});
  } else {
    out << "betti: " << joined(betti) << '\n'
        << "laplacian zero multiplicities: " << joined(harmonic) << '\n'
        << "constituent split: " << joined(split) << '\n'
        << "consistent: " << yesNo(ok) << '\n';
  }
  if (!ok) {
    err << "error: Betti cross-checks disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int runDirichlet(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.bound < 1) throw InvalidArgument("N must be positive");
  if (config.k < 1) throw InvalidArgument("--k must be at least 1");
  const PrimeSieve sieve(config.bound);
  const auto t = tVector(sieve, config.bound, config.k);
  const auto s = sVector(sieve, config.bound, config.k);
  const auto pi = sieve.primes().size();
  const bool withMatrices = config.matrices && config.bound >= 2;
  DenseMatrix<int> y, u;
  if (withMatrices) {
    y = y2Matrix(config.bound);
    u = u2Matrix(config.bound);
  }
  auto rowsOf = [](const DenseMatrix<int>& a) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      rows.push_back(std::vector<int>(a.row(r).begin(), a.row(r).end()));
    }
    return rows;
  };
  if (config.output == OutputMode::Json) {
    json j{{"N", config.bound}, {"k", config.k}, {"t", t}, {"s", s}, {"pi", pi}};
    if (withMatrices) {
      j["Y2"] = rowsOf(y);
      j["U2"] = rowsOf(u);
    }
    emitJson(out, j);
    return kExitOk;
  }
  out << "N " << config.bound << '\n'
      << "pi " << pi << '\n'
      << "k " << config.k << '\n'
      << "t " << joined(t) << '\n'
      << "s " << joined(s) << '\n';
  if (withMatrices) {
    auto table = [&](const char* name, const DenseMatrix<int>& a) {
      out << name << '(' << config.bound << ")\n";
      for (std::size_t r = 0; r < a.rows(); ++r) out << joined(a.row(r)) << '\n';
    };
    table("Y2", y);
    table("U2", u);
  }
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "check") return runCheck(config, out, err);
    if (config.command == "matrix") return runMatrix(config, out, err);
    if (config.command == "spectrum") return runSpectrum(config, out, err);
    if (config.command == "decompose") return runDecompose(config, out, err);
    if (config.command == "betti") return runBetti(config, out, err);
    if (config.command == "dirichlet") return runDirichlet(config, out, err);
    err << "error: unknown command '" << config.command << "'\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NotDivisorClosed& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NotShifted& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DegreeOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplacian spectra of multicomplexes and shifted-complex formulas", "multilap"};
  app.require_subcommand(1);
  RunConfig config;
  std::string method = "both";
  std::string order = "natural";
  bool jsonOutput = false;

  auto fileCommand = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", config.input, "multicomplex file ('-' for stdin)")->required();
    sub->add_flag("--json", jsonOutput, "machine-readable output");
    sub->add_flag("--symbolic", config.symbolic, "input lines are monomials like x1^2*x2");
    sub->add_option("--relabel-seed", config.relabelSeed, "permute variables with this seed first");
    return sub;
  };

  fileCommand("check", "validate a multicomplex and report shiftedness");
  auto* matrix = fileCommand("matrix", "dump the boundary matrix d_degree");
  matrix->add_option("--degree", config.degree, "chain degree")->required();
  auto* spectrum = fileCommand("spectrum", "Laplacian spectra and the shifted formula");
  spectrum->add_option("--degree", config.degree, "chain degree (all degrees when omitted)");
  spectrum->add_option("--method", method, "eig | formula | both")
      ->check(CLI::IsMember({"eig", "formula", "both"}));
  spectrum->add_option("--tol", config.tol, "comparison tolerance");
  spectrum->add_option("--order", order, "natural | reverse")
      ->check(CLI::IsMember({"natural", "reverse"}));
  spectrum->add_flag("--force", config.force, "evaluate the formula on non-shifted input");
  fileCommand("decompose", "constituent decomposition and f-vectors");
  fileCommand("betti", "real Betti numbers with cross-checks");

  auto* dirichlet = app.add_subcommand("dirichlet", "spectra of the truncation M_N");
  dirichlet->add_option("N", config.bound, "bound N")->required();
  dirichlet->add_option("--k", config.k, "chain degree k");
  dirichlet->add_flag("--matrices", config.matrices, "print Y2(N) and U2(N)");
  dirichlet->add_flag("--json", jsonOutput, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  config.command = app.get_subcommands().front()->get_name();
  config.method = method == "eig" ? Method::Eig : method == "formula" ? Method::Formula : Method::Both;
  config.reverseOrder = order == "reverse";
  config.output = jsonOutput ? OutputMode::Json : OutputMode::Text;
  return run(config, out, err);
}

}  // namespace multilap::cli
