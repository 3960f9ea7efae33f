#include <algorithm>
#include <random>

#include "json.hpp"

#include "cherednik/banach.hpp"
#include "cherednik/category_o.hpp"
#include "cherednik/cli.hpp"
#include "cherednik/element_syntax.hpp"
#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

using Row = std::vector<std::string>;

std::string join_scalars(const std::vector<Scalar>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + xs[k].str();
  return out;
}

std::string join_labels(const std::vector<std::size_t>& idx, const std::vector<Irrep>& irreps) {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? "," : "") + irreps[idx[k]].label;
  return out;
}

unsigned require_cutoff(const JobConfig& cfg) {
  if (!cfg.cutoff) throw ValidationError("field 'cutoff': required for command " + cfg.command);
  return *cfg.cutoff;
}

PadicContext require_context(const JobConfig& cfg) {
  if (!cfg.prime) throw ValidationError("field 'prime': required for command " + cfg.command);
  return PadicContext(*cfg.prime, cfg.precision, cfg.data.group->field());
}

std::vector<std::size_t> selected_irreps(const JobConfig& cfg) {
  if (cfg.irrep) return {cfg.data.irrep_index(*cfg.irrep)};
  std::vector<std::size_t> out(cfg.data.irreps.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = k;
  return out;
}

std::vector<LevelParams> selected_levels(const JobConfig& cfg, const CherednikAlgebra& algebra, const PadicContext& ctx) {
  if (cfg.level) {
    const unsigned r = cfg.r ? *cfg.r : level_sequence(algebra, ctx, *cfg.level).back().r;
    return {LevelParams{*cfg.level, r, ctx}};
  }
  return level_sequence(algebra, ctx, cfg.levels);
}

// Seeded element with up to three terms of degree <= 2 and p-power coefficients.
PBWElement seeded_element(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  std::mt19937_64 rng(cfg.seed);
  const std::size_t n = algebra.rank();
  const long p = cfg.prime ? static_cast<long>(*cfg.prime) : 2;
  PBWElement x = algebra.zero();
  const unsigned terms = 1 + static_cast<unsigned>(rng() % 3);
  for (unsigned t = 0; t < terms; ++t) {
    auto exps = [&](unsigned deg) {
      Exponents e(n, 0);
      for (unsigned k = 0; k < deg; ++k) ++e[rng() % n];
      return e;
    };
    const unsigned left = static_cast<unsigned>(rng() % 3), right = static_cast<unsigned>(rng() % 3);
    PBWKey key{exps(left), static_cast<std::size_t>(rng() % algebra.group().order()), exps(right)};
    const long num = 1 + static_cast<long>(rng() % 9);
    const long e = static_cast<long>(rng() % 5) - 2;
    x.add_term(key, Scalar(num) * Scalar(p).pow(e));
  }
  return x;
}

PBWElement job_element(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  return cfg.element ? parse_element(*cfg.element, algebra) : seeded_element(cfg, algebra);
}

std::string format_vector(const VermaSlice& slice, unsigned n, const Vec& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const Scalar& c = v[k];
    std::string coeff;
    bool negative = false;
    if (c.is_rational() && c.to_rational() < 0) {
      negative = true;
      coeff = (-c).str();
    } else {
      coeff = c.str();
    }
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (coeff != "1") out += coeff + "*";
    out += slice.basis_label(n, k);
  }
  return out.empty() ? "0" : out;
}

std::string format_term(const CherednikAlgebra& algebra, const PBWKey& key, const Scalar& coeff) {
  return format_element(algebra.monomial(key, coeff));
}

Report make_report(const JobConfig& cfg, std::vector<std::string> columns, std::vector<bool> numeric) {
  Report r;
  r.command = cfg.command;
  r.config = cfg.echo();
  r.columns = std::move(columns);
  r.numeric = std::move(numeric);
  return r;
}

Report cmd_reflections(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  Report r = make_report(cfg, {"element", "class", "lambda", "alpha", "alpha_vee", "c"},
                         {true, true, false, false, false, false});
  const auto classes = reflection_classes(algebra.group());
  for (const PseudoReflection& s : algebra.reflections()) {
    const std::size_t cls = algebra.group().class_of(s.element);
    const std::size_t pos = static_cast<std::size_t>(std::find(classes.begin(), classes.end(), cls) - classes.begin());
    r.rows.push_back({std::to_string(s.element), std::to_string(pos), s.lambda.str(), join_scalars(s.alpha),
                      join_scalars(s.alpha_vee), algebra.c()(s.element).str()});
  }
  return r;
}

Report cmd_euler(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  Report r = make_report(cfg, {"kind", "label", "value"}, {false, false, false});
  r.rows.push_back({"euler", "-", format_element(algebra.euler())});
  r.rows.push_back({"euler_central", "-", format_element(algebra.euler_central())});
  for (const Irrep& w : cfg.data.irreps) r.rows.push_back({"c_scalar", w.label, c_scalar(w, algebra).str()});
  return r;
}

Report cmd_verma_weights(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  const unsigned cutoff = require_cutoff(cfg);
  Report r = make_report(cfg, {"irrep", "degree", "weight", "dim"}, {false, true, false, true});
  for (std::size_t w : selected_irreps(cfg)) {
    const VermaSlice slice(algebra, cfg.data.irreps[w], cutoff);
    for (const WeightSpace& ws : weight_spaces(slice)) {
      r.rows.push_back({cfg.data.irreps[w].label, std::to_string(ws.degree), ws.weight.str(), std::to_string(ws.dim)});
    }
  }
  return r;
}

Report cmd_singular(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  const unsigned cutoff = require_cutoff(cfg);
  Report r = make_report(cfg, {"irrep", "degree", "isotype", "multiplicity", "vectors"}, {false, true, false, true, false});
  for (std::size_t w : selected_irreps(cfg)) {
    const VermaSlice slice(algebra, cfg.data.irreps[w], cutoff);
    for (unsigned n = 1; n <= cutoff; ++n) {
      const SingularSpace space = singular_vectors(slice, n, cfg.data.irreps);
      for (const IsotypicPart& part : space.parts) {
        std::string vectors;
        for (std::size_t k = 0; k < part.basis.size(); ++k) {
          vectors += (k ? "; " : "") + format_vector(slice, n, part.basis[k]);
        }
        r.rows.push_back({cfg.data.irreps[w].label, std::to_string(n), part.label, std::to_string(part.multiplicity), vectors});
      }
    }
  }
  return r;
}

Report cmd_simple_character(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  const unsigned cutoff = require_cutoff(cfg);
  Report r = make_report(cfg, {"simple", "degree", "label", "mult"}, {false, true, false, true});
  for (std::size_t w : selected_irreps(cfg)) {
    const SimpleQuotient q = simple_quotient_slice(algebra, cfg.data.irreps, w, cutoff);
    const std::string name = "L(" + cfg.data.irreps[w].label + ")";
    r.notes.push_back(name + " stable_under_cutoff=" + (q.stable_under_cutoff ? "true" : "false") +
                      " passes=" + std::to_string(q.passes));
    for (unsigned n = 0; n <= cutoff; ++n) {
      for (std::size_t k = 0; k < q.character.labels.size(); ++k) {
        r.rows.push_back({name, std::to_string(n), q.character.labels[k], std::to_string(q.character.mult[n][k])});
      }
    }
  }
  return r;
}

Report cmd_order(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  Report r = make_report(cfg, {"from", "to", "difference"}, {false, false, false});
  const auto& irreps = cfg.data.irreps;
  for (const auto& [w, e] : highest_weight_order(irreps, algebra)) {
    r.rows.push_back({irreps[w].label, irreps[e].label, (c_scalar(irreps[e], algebra) - c_scalar(irreps[w], algebra)).str()});
  }
  return r;
}

Report cmd_blocks(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  Report r = make_report(cfg, {"block", "members"}, {true, false});
  const auto bs = blocks(cfg.data.irreps, algebra);
  for (std::size_t b = 0; b < bs.size(); ++b) r.rows.push_back({std::to_string(b), join_labels(bs[b], cfg.data.irreps)});
  return r;
}

Report cmd_decomp_matrix(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  const unsigned cutoff = require_cutoff(cfg);
  Report r = make_report(cfg, {"verma", "simple", "multiplicity"}, {false, false, true});
  const auto& irreps = cfg.data.irreps;
  const auto matrix = decomposition_matrix(irreps, algebra, cutoff);
  for (std::size_t w = 0; w < irreps.size(); ++w) {
    for (std::size_t e = 0; e < irreps.size(); ++e) {
      r.rows.push_back({irreps[w].label, irreps[e].label, std::to_string(matrix[w][e])});
    }
  }
  return r;
}

Report cmd_norm(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  const PadicContext ctx = require_context(cfg);
  const PBWElement x = job_element(cfg, algebra);
  Report r = make_report(cfg, {"level", "r", "term", "weighted_valuation"}, {true, true, false, false});
  r.notes.push_back("element " + format_element(x));
  for (const LevelParams& params : selected_levels(cfg, algebra, ctx)) {
    for (const auto& [k, c] : x.terms()) {
      r.rows.push_back({std::to_string(params.m), std::to_string(params.r), format_term(algebra, k, c),
                        weighted_valuation(k, c, params).str()});
    }
    std::string norm;
    try {
      norm = gauss_norm(make_banach(x, params), params).str();
    } catch (const TailDominated&) {
      norm = ">=" + std::to_string(params.ctx.precision());
    }
    r.notes.push_back("level " + std::to_string(params.m) + " gauss_norm_exponent " + norm);
  }
  return r;
}

Report cmd_lattice_check(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  const PadicContext ctx = require_context(cfg);
  Report r = make_report(cfg, {"level", "r", "checked", "status", "violations", "first_violation"},
                         {true, true, true, false, true, false});
  r.notes.push_back("rho_c " + std::to_string(rho_c(algebra, ctx)));
  for (const LevelParams& params : selected_levels(cfg, algebra, ctx)) {
    const LatticeReport rep = lattice_check(algebra, params);
    std::string first = "-";
    if (!rep.violations.empty()) {
      first = rep.violations.front().expression + " : " + std::to_string(rep.violations.front().exponent);
    }
    r.rows.push_back({std::to_string(params.m), std::to_string(params.r), std::to_string(rep.checked),
                      rep.pass ? "pass" : "fail", std::to_string(rep.violations.size()), first});
  }
  return r;
}

Report cmd_ws_decompose(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  const PadicContext ctx = require_context(cfg);
  const PBWElement x = job_element(cfg, algebra);
  Report r = make_report(cfg, {"level", "weight", "component", "norm_exponent"}, {true, true, false, false});
  r.notes.push_back("element " + format_element(x));
  for (const LevelParams& params : selected_levels(cfg, algebra, ctx)) {
    for (const auto& [deg, comp] : weight_decompose_banach(algebra, make_banach(x, params))) {
      std::string norm;
      try {
        norm = gauss_norm(comp, params).str();
      } catch (const TailDominated&) {
        norm = ">=" + std::to_string(comp.tail);
      }
      r.rows.push_back({std::to_string(params.m), std::to_string(deg), format_element(comp.element), norm});
    }
  }
  return r;
}

Report cmd_coadmissible_check(const JobConfig& cfg, const CherednikAlgebra& algebra) {
  const PadicContext ctx = require_context(cfg);
  if (cfg.level) throw ValidationError("field 'level': coadmissible-check uses levels, not level");
  const std::vector<LevelParams> levels = level_sequence(algebra, ctx, cfg.levels);
  Report r = make_report(cfg, {"family", "levels", "status", "failing_level", "detail"}, {false, true, false, true, false});
  const std::vector<std::pair<std::string, PBWElement>> families = {{"element", job_element(cfg, algebra)},
                                                                    {"euler", algebra.euler()}};
  for (const auto& [name, x] : families) {
    std::vector<BanachElement> family;
    for (const LevelParams& params : levels) family.push_back(make_banach(x, params));
    const CoadmissibleReport rep = coadmissible_check(family, levels);
    r.rows.push_back({name, std::to_string(levels.size()), rep.pass ? "pass" : "fail", std::to_string(rep.failing_level),
                      rep.detail.empty() ? "-" : rep.detail});
  }
  return r;
}

using Handler = Report (*)(const JobConfig&, const CherednikAlgebra&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table = {
      {"reflections", cmd_reflections},
      {"euler", cmd_euler},
      {"verma-weights", cmd_verma_weights},
      {"singular", cmd_singular},
      {"simple-character", cmd_simple_character},
      {"order", cmd_order},
      {"blocks", cmd_blocks},
      {"decomp-matrix", cmd_decomp_matrix},
      {"norm", cmd_norm},
      {"lattice-check", cmd_lattice_check},
      {"ws-decompose", cmd_ws_decompose},
      {"coadmissible-check", cmd_coadmissible_check},
  };
  return table;
}

std::string sanitize(const std::string& cell) {
  std::string out = cell;
  std::replace(out.begin(), out.end(), '\t', ' ');
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_command(const JobConfig& cfg) {
  for (const auto& [name, handler] : handlers()) {
    if (name != cfg.command) continue;
    const CherednikAlgebra algebra(cfg.data.group, ReflectionFunction(*cfg.data.group, cfg.c));
    return handler(cfg, algebra);
  }
  throw ValidationError("unknown command '" + cfg.command + "'");
}

std::string emit_report(const Report& report, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::tsv) {
    out += "# cherednik " + std::string(kVersion) + "\t" + report.command + "\n";
    out += "# config";
    for (const auto& [k, v] : report.config) out += "\t" + k + "=" + sanitize(v);
    out += "\n";
    for (const std::string& note : report.notes) out += "# note\t" + sanitize(note) + "\n";
    for (std::size_t k = 0; k < report.columns.size(); ++k) out += (k ? "\t" : "") + report.columns[k];
    out += "\n";
    for (const Row& row : report.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "\t" : "") + sanitize(row[k]);
      out += "\n";
    }
    return out;
  }
  nlohmann::ordered_json header;
  header["type"] = "header";
  header["version"] = kVersion;
  header["command"] = report.command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.config) config[k] = v;
  header["config"] = config;
  header["notes"] = report.notes;
  out += header.dump() + "\n";
  for (const Row& row : report.rows) {
    nlohmann::ordered_json rec;
    rec["type"] = "row";
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k < report.numeric.size() && report.numeric[k]) {
        rec[report.columns[k]] = std::stol(row[k]);
      } else {
        rec[report.columns[k]] = row[k];
      }
    }
    out += rec.dump() + "\n";
  }
  return out;
}

}  // namespace cherednik
