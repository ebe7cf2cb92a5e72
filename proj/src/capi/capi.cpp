#include "covspec/covspec.h"

#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "core/lattice.hpp"
#include "curvature/curvature.hpp"
#include "graph/covering.hpp"
#include "graph/metric_graph.hpp"
#include "model/expr.hpp"
#include "model/spaces.hpp"
#include "model/warped_geodesic.hpp"
#include "rescaled/rescaled.hpp"
#include "tower/graph_tower.hpp"
#include "tower/slipping.hpp"
#include "verify/suites.hpp"

using namespace covspec;

struct covspec_spectrum {
  Spectrum s;
  std::vector<std::string> symbolic;  // cached so the pointers stay valid

  explicit covspec_spectrum(Spectrum sp) : s(std::move(sp)) {
    for (const auto& v : s.values()) symbolic.push_back(v.symbolic());
  }
};

struct covspec_graph {
  graph::MetricGraph g;
  std::string text;
};

struct covspec_tower {
  tower::GraphTower t;
  std::vector<std::vector<std::string>> names;  // per level generator names
};

struct covspec_cylinder {
  model::CylinderReport report;
  std::unique_ptr<covspec_spectrum> spectrum;
};

struct covspec_model {
  std::unique_ptr<rescaled::SpaceModel> m;
  std::string name;
};

namespace {

thread_local std::string g_error;
thread_local int g_line = 0, g_column = 0;

covspec_status fail(covspec_status s, const std::string& msg, int line = 0, int column = 0) {
  g_error = msg;
  g_line = line;
  g_column = column;
  return s;
}

template <class F>
covspec_status guarded(F&& body) {
  try {
    body();
    return COVSPEC_OK;
  } catch (const graph::GraphParseError& e) {
    return fail(COVSPEC_ERR_PARSE, e.what(), e.line(), e.column());
  } catch (const model::ParseError& e) {
    return fail(COVSPEC_ERR_PARSE, e.what(), 0, static_cast<int>(e.column()));
  } catch (const model::SolverError& e) {
    return fail(COVSPEC_ERR_SOLVER, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(COVSPEC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(COVSPEC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const graph::GraphError& e) {
    // Missing files surface as graph errors from the loaders.
    std::string m = e.what();
    bool io = m.find("cannot open") != std::string::npos;
    return fail(io ? COVSPEC_ERR_IO : COVSPEC_ERR_INVALID_ARGUMENT, m);
  } catch (const std::bad_alloc&) {
    return fail(COVSPEC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(COVSPEC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(COVSPEC_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void copy_string(const std::string& s, char* buf, std::size_t size) {
  if (!buf || size == 0) return;
  std::size_t n = std::min(s.size(), size - 1);
  std::memcpy(buf, s.data(), n);
  buf[n] = '\0';
}

covspec_provenance to_c(ProvenanceKind k) {
  switch (k) {
    case ProvenanceKind::kExact: return COVSPEC_EXACT;
    case ProvenanceKind::kNumeric: return COVSPEC_NUMERIC;
    default: return COVSPEC_UNDETERMINED;
  }
}

covspec_verdict to_c(graph::Verdict v) {
  return v == graph::Verdict::kYes ? COVSPEC_YES : v == graph::Verdict::kNo ? COVSPEC_NO : COVSPEC_VERDICT_UNDETERMINED;
}

covspec_verdict to_c(rescaled::Verdict v) {
  return v == rescaled::Verdict::kYes ? COVSPEC_YES
         : v == rescaled::Verdict::kNo ? COVSPEC_NO
                                       : COVSPEC_VERDICT_UNDETERMINED;
}

rescaled::Variant to_variant(covspec_variant v) {
  require(v == COVSPEC_BASEPOINT || v == COVSPEC_INFINITY, "unknown variant");
  return v == COVSPEC_BASEPOINT ? rescaled::Variant::kBasepoint : rescaled::Variant::kInfinity;
}

covspec_graph* wrap(graph::MetricGraph g) {
  g.validate();
  auto* out = new covspec_graph{std::move(g), {}};
  out->text = out->g.to_text();
  return out;
}

covspec_tower* wrap(tower::GraphTower t) {
  t.validate();
  auto* out = new covspec_tower{std::move(t), {}};
  for (int l = 0; l < out->t.levels(); ++l) {
    std::vector<std::string> names;
    const auto& b = out->t.basis(l);
    for (int i = 0; i < b.rank(); ++i) names.push_back(b.generator_name(i));
    out->names.push_back(std::move(names));
  }
  return out;
}

covspec_model* wrap(std::unique_ptr<rescaled::SpaceModel> m) {
  auto* out = new covspec_model{std::move(m), {}};
  out->name = out->m->name();
  return out;
}

void fill(covspec_suite_result* out, const verify::SuiteResult& r) {
  out->pass = r.pass ? 1 : 0;
  out->checks = r.checks;
  out->failures = r.failures;
  out->worst = r.worst;
  copy_string(r.messages.empty() ? std::string() : r.messages.front(), out->message, sizeof out->message);
}

template <class T>
void null_out(T** out) {
  require(out != nullptr, "null output pointer");
  *out = nullptr;
}

}  // namespace

extern "C" {

const char* covspec_version(void) { return "1.0.0"; }

const char* covspec_status_string(covspec_status s) {
  switch (s) {
    case COVSPEC_OK: return "ok";
    case COVSPEC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case COVSPEC_ERR_PARSE: return "parse error";
    case COVSPEC_ERR_IO: return "i/o error";
    case COVSPEC_ERR_SOLVER: return "solver error";
    case COVSPEC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* covspec_last_error(void) { return g_error.c_str(); }

void covspec_last_error_position(int* line, int* column) {
  if (line) *line = g_line;
  if (column) *column = g_column;
}

covspec_status covspec_parse_length(const char* text, double* value, char* symbolic, size_t symbolic_size) {
  return guarded([&] {
    require(text && value, "null argument");
    auto l = model::parse_length(text);
    *value = l.value;
    copy_string(l.exact ? l.exact->to_string() : std::string(), symbolic, symbolic_size);
  });
}

/* ---- spectra ---- */

void covspec_spectrum_free(covspec_spectrum* s) { delete s; }

size_t covspec_spectrum_size(const covspec_spectrum* s) { return s ? s->s.size() : 0; }

covspec_status covspec_spectrum_value(const covspec_spectrum* s, size_t i, double* value,
                                      covspec_provenance* provenance, double* tolerance) {
  return guarded([&] {
    require(s != nullptr, "null spectrum");
    require(i < s->s.size(), "index out of range");
    const auto& v = s->s.values()[i];
    if (value) *value = v.value;
    if (provenance) *provenance = to_c(v.provenance.kind);
    if (tolerance) *tolerance = v.provenance.tolerance;
  });
}

const char* covspec_spectrum_symbolic(const covspec_spectrum* s, size_t i) {
  if (!s || i >= s->symbolic.size()) return "";
  return s->symbolic[i].c_str();
}

const char* covspec_spectrum_note(const covspec_spectrum* s, size_t i) {
  if (!s || i >= s->s.size()) return "";
  return s->s.values()[i].note.c_str();
}

size_t covspec_spectrum_accumulation_count(const covspec_spectrum* s) {
  return s ? s->s.accumulation_points().size() : 0;
}

covspec_status covspec_spectrum_accumulation(const covspec_spectrum* s, size_t i, double* value, double* radius) {
  return guarded([&] {
    require(s != nullptr, "null spectrum");
    require(i < s->s.accumulation_points().size(), "index out of range");
    const auto& a = s->s.accumulation_points()[i];
    if (value) *value = a.value;
    if (radius) *radius = a.radius;
  });
}

int covspec_spectrum_has_undetermined(const covspec_spectrum* s) { return s && s->s.has_undetermined() ? 1 : 0; }

int covspec_spectrum_complete_below(const covspec_spectrum* s, double* bound) {
  if (!s || !s->s.complete_below) return 0;
  if (bound) *bound = *s->s.complete_below;
  return 1;
}

/* ---- flat tori ---- */

covspec_status covspec_torus_spectrum(const char* const* diameters, size_t count, covspec_spectrum** out) {
  return guarded([&] {
    null_out(out);
    require(diameters && count > 0, "need at least one circle");
    std::vector<ExactLength> d;
    for (std::size_t i = 0; i < count; ++i) {
      require(diameters[i] != nullptr, "null diameter");
      auto l = model::parse_length(diameters[i]);
      if (!l.exact) throw std::invalid_argument(std::string("diameter is not exact: ") + diameters[i]);
      d.push_back(*l.exact);
    }
    *out = new covspec_spectrum(lattice_covering_spectrum(d));
  });
}

/* ---- metric graphs ---- */

covspec_status covspec_graph_load(const char* path, covspec_graph** out) {
  return guarded([&] {
    null_out(out);
    require(path != nullptr, "null path");
    *out = wrap(graph::load_graph_file(path));
  });
}

covspec_status covspec_graph_parse(const char* text, covspec_graph** out) {
  return guarded([&] {
    null_out(out);
    require(text != nullptr, "null text");
    *out = wrap(graph::parse_graph(text));
  });
}

covspec_status covspec_graph_preset(const char* name, int param, covspec_graph** out) {
  return guarded([&] {
    null_out(out);
    require(name != nullptr, "null name");
    std::string n = name;
    ExactLength two_pi(0, 2), three_pi(0, 3);
    if (n == "circle") {
      *out = wrap(graph::circle_graph(Length(two_pi)));
    } else if (n == "figure8") {
      *out = wrap(graph::figure_eight(Length(two_pi), Length(three_pi)));
    } else if (n == "harmonic-wedge") {
      require(param >= 1, "harmonic-wedge needs J >= 1");
      *out = wrap(graph::harmonic_wedge(param));
    } else {
      throw std::invalid_argument("unknown graph preset: " + n);
    }
  });
}

covspec_status covspec_graph_random(uint64_t seed, int max_edges, covspec_graph** out) {
  return guarded([&] {
    null_out(out);
    require(max_edges >= 1, "max_edges must be positive");
    *out = wrap(graph::random_metric_graph(seed, max_edges));
  });
}

void covspec_graph_free(covspec_graph* g) { delete g; }
int covspec_graph_rank(const covspec_graph* g) { return g ? g->g.rank() : 0; }
int covspec_graph_edge_count(const covspec_graph* g) { return g ? g->g.edge_count() : 0; }
const char* covspec_graph_text(const covspec_graph* g) { return g ? g->text.c_str() : ""; }

covspec_status covspec_graph_spectrum(const covspec_graph* g, const char* lmax, covspec_spectrum** out,
                                      int* truncated) {
  return guarded([&] {
    null_out(out);
    require(g != nullptr, "null graph");
    graph::GraphSpectrumOptions opts;
    if (lmax) opts.Lmax = model::parse_length(lmax);
    auto rep = graph::covering_spectrum_report(g->g, opts);
    if (truncated) *truncated = rep.truncated ? 1 : 0;
    *out = new covspec_spectrum(std::move(rep.spectrum));
  });
}

covspec_status covspec_graph_covofshift(const covspec_graph* g, int* pass, size_t* violations) {
  return guarded([&] {
    require(g != nullptr, "null graph");
    auto rep = graph::covofshift_check(g->g);
    if (pass) *pass = rep.pass ? 1 : 0;
    if (violations) *violations = rep.violations.size();
  });
}

/* ---- warped cylinders ---- */

namespace {

covspec_cylinder* make_cylinder(model::CylinderReport rep) {
  auto* c = new covspec_cylinder{std::move(rep), nullptr};
  c->spectrum = std::make_unique<covspec_spectrum>(c->report.spectrum);
  return c;
}

}  // namespace

covspec_status covspec_cylinder_compute(const char* f, const char* circumference, int max_power,
                                        covspec_cylinder** out) {
  return guarded([&] {
    null_out(out);
    require(f && circumference, "null argument");
    require(max_power >= 1, "max_power must be positive");
    auto w = model::WarpFunction::parse(f);
    auto c = model::parse_length(circumference);
    require(c.value > 0, "circumference must be positive");
    model::CylinderOptions opts;
    opts.max_power = max_power;
    *out = make_cylinder(model::covspec_warped_cylinder(w, c, opts));
  });
}

covspec_status covspec_cylinder_preset(const char* name, covspec_cylinder** out) {
  return guarded([&] {
    null_out(out);
    require(name != nullptr, "null name");
    std::string n = name;
    require(n == "cusp-cylinder" || n == "gauss-bump-cylinder" || n == "flat-cylinder",
            "not a cylinder preset");
    auto p = model::model_preset(n);
    *out = make_cylinder(model::covspec_warped_cylinder(p.plane.f, p.circumference));
  });
}

void covspec_cylinder_free(covspec_cylinder* c) { delete c; }

const covspec_spectrum* covspec_cylinder_spectrum(const covspec_cylinder* c) {
  return c ? c->spectrum.get() : nullptr;
}

size_t covspec_cylinder_length_count(const covspec_cylinder* c) { return c ? c->report.lengths.size() : 0; }

covspec_status covspec_cylinder_length(const covspec_cylinder* c, size_t i, long* power, double* length,
                                       int* attained, double* argmin) {
  return guarded([&] {
    require(c != nullptr, "null cylinder");
    require(i < c->report.lengths.size(), "index out of range");
    const auto& l = c->report.lengths[i];
    if (power) *power = l.power;
    if (length) *length = l.length;
    if (attained) *attained = l.attained ? 1 : 0;
    if (argmin) *argmin = l.argmin;
  });
}

int covspec_cylinder_generator_slipping(const covspec_cylinder* c) {
  return c && c->report.generator_slipping ? 1 : 0;
}

covspec_status covspec_warped_ratio(const char* f, double d, const double* r, size_t count, double* out) {
  return guarded([&] {
    require(f && (count == 0 || (r && out)), "null argument");
    require(d > 0, "d must be positive");
    auto w = model::WarpFunction::parse(f);
    for (std::size_t i = 0; i < count; ++i) {
      require(r[i] > 0, "r must be positive");
      out[i] = model::warped_geodesic_F(w, r[i], d) / r[i];
    }
  });
}

/* ---- cones ---- */

covspec_status covspec_cone_spectra(const char* k, const char* const* base_covspec, size_t count,
                                    const char* base_diameter, covspec_spectrum** infinite,
                                    covspec_spectrum** basepoint) {
  return guarded([&] {
    null_out(infinite);
    null_out(basepoint);
    require(k && base_diameter && (count == 0 || base_covspec), "null argument");
    model::ConeSpace cone;
    cone.k = model::parse_length(k);
    for (std::size_t i = 0; i < count; ++i) cone.base_covspec.push_back(model::parse_length(base_covspec[i]));
    cone.base_diameter = model::parse_length(base_diameter);
    auto spectra = model::cone_rescaled_spectrum(cone);
    auto inf = std::make_unique<covspec_spectrum>(std::move(spectra.infinite));
    *basepoint = new covspec_spectrum(std::move(spectra.basepoint));
    *infinite = inf.release();
  });
}

/* ---- rescaled spectra ---- */

covspec_status covspec_model_preset(const char* name, covspec_model** out) {
  return guarded([&] {
    null_out(out);
    require(name != nullptr, "null name");
    *out = wrap(rescaled::rescaled_preset(name));
  });
}

covspec_status covspec_model_cone(double k, double fiber_length, covspec_model** out) {
  return guarded([&] {
    null_out(out);
    require(k > 0 && fiber_length > 0, "need k > 0 and a positive fiber length");
    *out = wrap(rescaled::cone(k, fiber_length));
  });
}

covspec_status covspec_model_moebius(double c, covspec_model** out) {
  return guarded([&] {
    null_out(out);
    require(c > 0, "width must be positive");
    *out = wrap(rescaled::moebius(c));
  });
}

covspec_status covspec_model_nabonnand(const char* warp, covspec_model** out) {
  return guarded([&] {
    null_out(out);
    *out = wrap(warp ? rescaled::nabonnand(warp) : rescaled::nabonnand());
  });
}

covspec_status covspec_model_scaled(const covspec_model* m, double R, covspec_model** out) {
  return guarded([&] {
    null_out(out);
    require(m != nullptr, "null model");
    require(R > 0, "scale must be positive");
    *out = wrap(m->m->scaled(R));
  });
}

covspec_status covspec_model_with_basepoint(const covspec_model* m, double u, double v, covspec_model** out) {
  return guarded([&] {
    null_out(out);
    require(m != nullptr, "null model");
    *out = wrap(m->m->with_basepoint({u, v}));
  });
}

void covspec_model_free(covspec_model* m) { delete m; }
const char* covspec_model_name(const covspec_model* m) { return m ? m->name.c_str() : ""; }
int covspec_model_complete(const covspec_model* m) { return m && m->m->complete() ? 1 : 0; }

covspec_status covspec_rescaled_length(const covspec_model* m, long power, covspec_variant which, int cross_check,
                                       covspec_length_report* out) {
  return guarded([&] {
    require(m && out, "null argument");
    rescaled::RescaledOptions opts;
    opts.cross_check = cross_check != 0;
    auto r = rescaled::rescaled_length(*m->m, power, to_variant(which), opts);
    *out = covspec_length_report{};
    out->value = r.value;
    out->exact = r.exact ? 1 : 0;
    copy_string(r.exact ? r.exact->to_string() : std::string(), out->symbolic, sizeof out->symbolic);
    out->attained = r.attained ? 1 : 0;
    copy_string(r.convergence, out->convergence, sizeof out->convergence);
    out->has_numeric = r.numeric ? 1 : 0;
    out->numeric = r.numeric.value_or(0.0);
  });
}

covspec_status covspec_rescaled_spectrum(const covspec_model* m, covspec_variant which, long max_power,
                                         covspec_spectrum** out) {
  return guarded([&] {
    null_out(out);
    require(m != nullptr, "null model");
    require(max_power >= 1, "max_power must be positive");
    rescaled::RescaledOptions opts;
    opts.max_power = max_power;
    *out = new covspec_spectrum(rescaled::rescaled_covspec(*m->m, to_variant(which), opts));
  });
}

covspec_status covspec_rescaled_delta_group(const covspec_model* m, double delta, covspec_variant which,
                                            long* generator, size_t* boundary) {
  return guarded([&] {
    require(m != nullptr, "null model");
    auto g = rescaled::rescaled_delta_group(*m->m, delta, to_variant(which));
    if (generator) *generator = g.generator;
    if (boundary) *boundary = g.boundary.size();
  });
}

covspec_status covspec_rescaled_slipping(const covspec_model* m, long power, covspec_verdict* out) {
  return guarded([&] {
    require(m && out, "null argument");
    *out = to_c(rescaled::rescaled_slipping_membership(*m->m, power).verdict);
  });
}

covspec_status covspec_rescaled_loops_to_infinity(const covspec_model* m, long power, int* loops,
                                                  int* cut_spectrum_empty) {
  return guarded([&] {
    require(m != nullptr, "null model");
    auto f = rescaled::loops_to_infinity_flag(*m->m, power);
    if (loops) *loops = f.loops_to_infinity ? 1 : 0;
    if (cut_spectrum_empty) *cut_spectrum_empty = f.cut_spectrum_empty ? 1 : 0;
  });
}

/* ---- towers ---- */

covspec_status covspec_tower_load(const char* path, covspec_tower** out) {
  return guarded([&] {
    null_out(out);
    require(path != nullptr, "null path");
    *out = wrap(tower::load_tower_file(path));
  });
}

covspec_status covspec_tower_parse(const char* text, covspec_tower** out) {
  return guarded([&] {
    null_out(out);
    require(text != nullptr, "null text");
    *out = wrap(tower::parse_tower(text));
  });
}

covspec_status covspec_tower_preset(const char* name, int levels, covspec_tower** out) {
  return guarded([&] {
    null_out(out);
    require(name != nullptr, "null name");
    require(levels >= 1, "levels must be positive");
    std::string n = name;
    if (n == "pants") {
      *out = wrap(tower::pants_tower(levels));
    } else if (n == "harmonic-wedge") {
      *out = wrap(tower::harmonic_wedge_tower(levels));
    } else if (n == "shrinking-wedge") {
      *out = wrap(tower::shrinking_wedge_tower(levels));
    } else if (n == "shrinking-loop") {
      *out = wrap(tower::shrinking_loop_tower(levels));
    } else if (n == "slipping-barbell") {
      *out = wrap(tower::slipping_barbell_tower(levels));
    } else {
      throw std::invalid_argument("unknown tower preset: " + n);
    }
  });
}

covspec_status covspec_tower_constant(const covspec_graph* g, int levels, covspec_tower** out) {
  return guarded([&] {
    null_out(out);
    require(g != nullptr, "null graph");
    require(levels >= 1, "levels must be positive");
    *out = wrap(tower::constant_tower(g->g, levels));
  });
}

void covspec_tower_free(covspec_tower* t) { delete t; }
int covspec_tower_levels(const covspec_tower* t) { return t ? t->t.levels() : 0; }

size_t covspec_tower_generator_count(const covspec_tower* t, int level) {
  if (!t || level < 0 || level >= t->t.levels()) return 0;
  return t->names[static_cast<std::size_t>(level)].size();
}

const char* covspec_tower_generator_name(const covspec_tower* t, int level, size_t i) {
  if (!t || level < 0 || level >= t->t.levels()) return "";
  const auto& names = t->names[static_cast<std::size_t>(level)];
  return i < names.size() ? names[i].c_str() : "";
}

covspec_status covspec_tower_slipping(const covspec_tower* t, int level, const char* element, double eps,
                                      covspec_verdict* out, int* witness_level) {
  return guarded([&] {
    require(t && element && out, "null argument");
    require(level >= 0 && level < t->t.levels(), "level out of range");
    require(eps > 0, "eps must be positive");
    tower::TowerElement g{level, t->t.parse_element(level, element)};
    auto r = tower::slipping_test(t->t, g, eps);
    *out = to_c(r.verdict);
    if (witness_level) *witness_level = r.witness_level;
  });
}

covspec_status covspec_tower_universal_slipping(const covspec_tower* t, int level, const char* element,
                                                double delta_max, int steps, covspec_verdict* out,
                                                double* resolved_to) {
  return guarded([&] {
    require(t && element && out, "null argument");
    require(level >= 0 && level < t->t.levels(), "level out of range");
    require(delta_max > 0 && steps >= 0, "need delta_max > 0 and steps >= 0");
    tower::TowerElement g{level, t->t.parse_element(level, element)};
    auto r = tower::universal_slipping_membership(t->t, g, tower::delta_schedule(delta_max, steps));
    *out = to_c(r.verdict);
    if (resolved_to) *resolved_to = r.resolved_to;
  });
}

covspec_status covspec_tower_cover_summary(const covspec_tower* t, int schedule_steps, covspec_cover_summary* out) {
  return guarded([&] {
    require(t && out, "null argument");
    require(schedule_steps >= 0, "steps must be nonnegative");
    auto r = tower::universal_delta_cover_report(t->t, schedule_steps);
    *out = covspec_cover_summary{};
    out->pi_slip_full = r.pi_slip_full;
    out->pi_slip_trivial = r.pi_slip_trivial;
    out->is_delta_cover = r.is_delta_cover;
    out->inf_positive = r.inf_positive;
    out->covspec_inf = r.covspec_inf;
    out->delta0 = r.delta0;
    out->undetermined = r.undetermined.size();
    copy_string(r.quotient_identity, out->quotient_identity, sizeof out->quotient_identity);
  });
}

/* ---- curvature ---- */

covspec_status covspec_ricci_circle(const char* f, const char* h, double r, double* out) {
  return guarded([&] {
    require(f && h && out, "null argument");
    auto spec = curvature::WarpedMetricSpec::from(model::WarpFunction::parse(f), model::WarpFunction::parse(h));
    *out = curvature::ricci_circle_direction(spec, r);
  });
}

covspec_status covspec_milnor_bound(int n, const char* delta, double* value, char* symbolic, size_t symbolic_size) {
  return guarded([&] {
    require(delta && value, "null argument");
    auto d = model::parse_length(delta);
    *value = curvature::milnor_bound(n, d.value);
    std::string sym;
    if (d.exact && d.exact->is_rational()) sym = ExactLength(curvature::milnor_bound_exact(n, d.exact->rational_part())).to_string();
    copy_string(sym, symbolic, symbolic_size);
  });
}

covspec_status covspec_wilking_curvature(double r, double* radial, double* fiber) {
  return guarded([&] {
    auto k = curvature::wilking_curvature(r);
    if (radial) *radial = k.radial;
    if (fiber) *fiber = k.fiber;
  });
}

/* ---- property suites ---- */

covspec_status covspec_verify_wilking(int samples, uint64_t seed, covspec_suite_result* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(samples >= 1, "samples must be positive");
    fill(out, verify::verify_wilking(samples, seed));
  });
}

covspec_status covspec_verify_covofshift(int graphs, uint64_t seed, covspec_suite_result* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(graphs >= 1, "graphs must be positive");
    fill(out, verify::verify_covofshift(graphs, seed));
  });
}

covspec_status covspec_verify_rescaled_lemmas(const char* preset, covspec_suite_result* out) {
  return guarded([&] {
    require(preset && out, "null argument");
    fill(out, verify::verify_rescaled_lemmas(preset));
  });
}

}  // extern "C"
