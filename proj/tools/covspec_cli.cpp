// covspec command-line tool. Talks to the library only through covspec.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "covspec/covspec.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUndetermined = 2;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(covspec_status s) {
  if (s == COVSPEC_OK) return;
  std::string msg = std::string(covspec_status_string(s)) + ": " + covspec_last_error();
  throw CliError(msg);
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using SpectrumPtr = std::unique_ptr<covspec_spectrum, Deleter<covspec_spectrum, covspec_spectrum_free>>;
using GraphPtr = std::unique_ptr<covspec_graph, Deleter<covspec_graph, covspec_graph_free>>;
using TowerPtr = std::unique_ptr<covspec_tower, Deleter<covspec_tower, covspec_tower_free>>;
using CylinderPtr = std::unique_ptr<covspec_cylinder, Deleter<covspec_cylinder, covspec_cylinder_free>>;
using ModelPtr = std::unique_ptr<covspec_model, Deleter<covspec_model, covspec_model_free>>;

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* provenance_name(covspec_provenance p) {
  switch (p) {
    case COVSPEC_EXACT: return "exact";
    case COVSPEC_NUMERIC: return "numeric";
    default: return "undetermined";
  }
}

const char* verdict_name(covspec_verdict v) {
  return v == COVSPEC_YES ? "yes" : v == COVSPEC_NO ? "no" : "undetermined";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// ---- output ----

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  std::vector<Table> tables;
  bool undetermined = false;
  std::string svg;  // plots only
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_table(const Table& t, std::ostream& os) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& r : t.rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      s += cells[c] + std::string(width[c] - cells[c].size(), ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << "\n";
  };
  if (!t.title.empty()) os << t.title << "\n";
  line(t.columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  if (t.rows.empty()) os << "(empty)\n";
  for (const auto& r : t.rows) line(r);
}

void render(const Output& out, const std::string& format, std::ostream& os) {
  if (format == "svg") {
    if (out.svg.empty()) throw CliError("svg output is only available for plot commands");
    os << out.svg;
    return;
  }
  if (format == "json") {
    Json doc = Json::object();
    for (const auto& t : out.tables) {
      Json rows = Json::array();
      for (const auto& r : t.rows) {
        Json row = Json::object();
        for (std::size_t c = 0; c < t.columns.size(); ++c) row[t.columns[c]] = r[c];
        rows.push_back(std::move(row));
      }
      doc[t.title] = std::move(rows);
    }
    doc["undetermined"] = out.undetermined;
    os << doc.dump(2) << "\n";
    return;
  }
  bool first = true;
  for (const auto& t : out.tables) {
    if (!first) os << "\n";
    first = false;
    if (format == "csv") {
      // One CSV block per table, blank line between blocks.
      for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_field(t.columns[c]);
      os << "\r\n";
      for (const auto& r : t.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << csv_field(r[c]);
        os << "\r\n";
      }
    } else {
      render_table(t, os);
    }
  }
}

// Spectrum rows: values then accumulation points.
Table spectrum_table(const std::string& title, const covspec_spectrum* s, bool* undetermined) {
  Table t{title, {"kind", "value", "symbolic", "provenance", "tolerance", "note"}, {}};
  for (std::size_t i = 0; i < covspec_spectrum_size(s); ++i) {
    double v = 0, tol = 0;
    covspec_provenance p = COVSPEC_EXACT;
    check(covspec_spectrum_value(s, i, &v, &p, &tol));
    if (p == COVSPEC_UNDETERMINED) *undetermined = true;
    t.rows.push_back({"value", num(v), covspec_spectrum_symbolic(s, i), provenance_name(p),
                      p == COVSPEC_NUMERIC ? num(tol) : "", covspec_spectrum_note(s, i)});
  }
  for (std::size_t i = 0; i < covspec_spectrum_accumulation_count(s); ++i) {
    double v = 0, r = 0;
    check(covspec_spectrum_accumulation(s, i, &v, &r));
    t.rows.push_back({"accumulation", num(v), "", "numeric", num(r), "lower accumulation point"});
  }
  double bound = 0;
  if (covspec_spectrum_complete_below(s, &bound)) {
    t.rows.push_back({"complete-below", num(bound), "", "exact", "", std::isinf(bound) ? "complete" : "complete below this value"});
  }
  return t;
}

// ---- commands ----

struct Common {
  std::string format = "table";
};

Output cmd_torus(const std::string& diameters) {
  auto items = split_list(diameters);
  if (items.empty()) throw CliError("--diameters needs at least one value");
  std::vector<const char*> ptrs;
  for (const auto& s : items) ptrs.push_back(s.c_str());
  covspec_spectrum* raw = nullptr;
  check(covspec_torus_spectrum(ptrs.data(), ptrs.size(), &raw));
  SpectrumPtr s(raw);
  Output out;
  out.tables.push_back(spectrum_table("spectrum", s.get(), &out.undetermined));
  return out;
}

GraphPtr load_graph(const std::string& file, const std::string& preset, int param) {
  covspec_graph* raw = nullptr;
  if (!file.empty() == !preset.empty()) throw CliError("give exactly one of a graph file or --preset");
  if (!file.empty()) {
    covspec_status st = covspec_graph_load(file.c_str(), &raw);
    if (st == COVSPEC_ERR_PARSE) {
      int line = 0, col = 0;
      covspec_last_error_position(&line, &col);
      throw CliError(file + ":" + std::to_string(line) + ":" + std::to_string(col) + ": parse error: " + covspec_last_error());
    }
    check(st);
  } else {
    check(covspec_graph_preset(preset.c_str(), param, &raw));
  }
  return GraphPtr(raw);
}

Output cmd_graph(const std::string& file, const std::string& preset, int param, const std::string& lmax) {
  auto g = load_graph(file, preset, param);
  covspec_spectrum* raw = nullptr;
  int truncated = 0;
  check(covspec_graph_spectrum(g.get(), lmax.empty() ? nullptr : lmax.c_str(), &raw, &truncated));
  SpectrumPtr s(raw);
  Output out;
  out.tables.push_back(spectrum_table("spectrum", s.get(), &out.undetermined));
  if (truncated) {
    out.undetermined = true;
    out.tables.push_back({"warnings", {"warning"}, {{"cycle enumeration hit its budget"}}});
  }
  return out;
}

Table cylinder_lengths(const covspec_cylinder* c) {
  Table t{"lengths", {"power", "length", "attained", "argmin"}, {}};
  for (std::size_t i = 0; i < covspec_cylinder_length_count(c); ++i) {
    long p = 0;
    double len = 0, arg = 0;
    int att = 0;
    check(covspec_cylinder_length(c, i, &p, &len, &att, &arg));
    t.rows.push_back({std::to_string(p), num(len), att ? "true" : "false", att ? num(arg) : ""});
  }
  return t;
}

Output cmd_cylinder(const std::string& f, const std::string& circumference, int max_power) {
  covspec_cylinder* raw = nullptr;
  check(covspec_cylinder_compute(f.c_str(), circumference.c_str(), max_power, &raw));
  CylinderPtr c(raw);
  Output out;
  out.tables.push_back(spectrum_table("spectrum", covspec_cylinder_spectrum(c.get()), &out.undetermined));
  out.tables.push_back(cylinder_lengths(c.get()));
  return out;
}

struct RescaledArgs {
  std::vector<std::string> target;  // [preset] name, or "cone"
  std::string which = "both";
  long max_power = 4;
  bool cross_check = false;
  std::string k = "1";
  std::string base_covspec;
  std::string base_diameter;
};

std::vector<covspec_variant> variants(const std::string& which) {
  if (which == "infinity") return {COVSPEC_INFINITY};
  if (which == "basepoint") return {COVSPEC_BASEPOINT};
  if (which == "both") return {COVSPEC_INFINITY, COVSPEC_BASEPOINT};
  throw CliError("--which must be infinity, basepoint or both");
}

const char* variant_name(covspec_variant v) { return v == COVSPEC_INFINITY ? "infinity" : "basepoint"; }

Output cmd_rescaled_cone(const RescaledArgs& a) {
  if (a.base_covspec.empty()) throw CliError("cone needs --base-covspec");
  auto items = split_list(a.base_covspec);
  std::vector<const char*> ptrs;
  std::string diam = a.base_diameter;
  double widest = -1;
  for (const auto& s : items) {
    ptrs.push_back(s.c_str());
    double v = 0;
    check(covspec_parse_length(s.c_str(), &v, nullptr, 0));
    // A circle's diameter is its single spectrum value; default to the largest.
    if (a.base_diameter.empty() && v > widest) widest = v, diam = s;
  }
  if (diam.empty()) throw CliError("cone needs --base-diameter when the base spectrum is empty");
  covspec_spectrum *inf = nullptr, *base = nullptr;
  check(covspec_cone_spectra(a.k.c_str(), ptrs.data(), ptrs.size(), diam.c_str(), &inf, &base));
  SpectrumPtr i(inf), b(base);
  Output out;
  for (auto v : variants(a.which)) {
    out.tables.push_back(spectrum_table(std::string("spectrum-") + variant_name(v),
                                        v == COVSPEC_INFINITY ? i.get() : b.get(), &out.undetermined));
  }
  return out;
}

Output cmd_rescaled(const RescaledArgs& a) {
  std::vector<std::string> target = a.target;
  if (!target.empty() && target.front() == "preset") target.erase(target.begin());
  if (target.size() != 1) throw CliError("give one model: a preset name or cone");
  if (target.front() == "cone" && !a.base_covspec.empty()) return cmd_rescaled_cone(a);
  if (a.max_power < 1) throw CliError("--max-power must be positive");
  covspec_model* raw = nullptr;
  check(covspec_model_preset(target.front().c_str(), &raw));
  ModelPtr m(raw);
  Output out;
  auto vs = variants(a.which);
  for (auto v : vs) {
    covspec_spectrum* s = nullptr;
    check(covspec_rescaled_spectrum(m.get(), v, a.max_power, &s));
    SpectrumPtr sp(s);
    out.tables.push_back(spectrum_table(std::string("spectrum-") + variant_name(v), sp.get(), &out.undetermined));
  }
  Table lengths{"lengths", {"power", "variant", "value", "symbolic", "attained", "convergence", "numeric"}, {}};
  for (long n = 1; n <= a.max_power; ++n) {
    for (auto v : vs) {
      covspec_length_report r{};
      check(covspec_rescaled_length(m.get(), n, v, a.cross_check ? 1 : 0, &r));
      lengths.rows.push_back({std::to_string(n), variant_name(v), num(r.value), r.exact ? r.symbolic : "",
                              r.attained ? "true" : "false", r.convergence, r.has_numeric ? num(r.numeric) : ""});
    }
  }
  out.tables.push_back(std::move(lengths));
  Table flags{"flags", {"power", "rescaled-slipping", "loops-to-infinity", "cut-spectrum-empty"}, {}};
  for (long n = 1; n <= a.max_power; ++n) {
    covspec_verdict slip = COVSPEC_VERDICT_UNDETERMINED;
    int loops = 0, cut = 0;
    check(covspec_rescaled_slipping(m.get(), n, &slip));
    check(covspec_rescaled_loops_to_infinity(m.get(), n, &loops, &cut));
    if (slip == COVSPEC_VERDICT_UNDETERMINED) out.undetermined = true;
    flags.rows.push_back({std::to_string(n), verdict_name(slip), loops ? "true" : "false", cut ? "true" : "false"});
  }
  out.tables.push_back(std::move(flags));
  return out;
}

struct SlippingArgs {
  std::vector<std::string> target;  // preset <name> | graph <file> | tower <file>
  int levels = 12;
  int max_level = 6;
  std::string delta = "2*pi/2^10";
  std::string delta_max = "2*pi";
  double eps = 1e-6;
  int summary_steps = 12;
};

void tower_rows(const covspec_tower* tower, const SlippingArgs& a, Output& out) {
  double delta = 0, delta_max = 0;
  check(covspec_parse_length(a.delta.c_str(), &delta, nullptr, 0));
  check(covspec_parse_length(a.delta_max.c_str(), &delta_max, nullptr, 0));
  if (!(delta > 0) || !(delta_max >= delta)) throw CliError("need 0 < --delta <= --delta-max");
  int steps = static_cast<int>(std::ceil(std::log2(delta_max / delta) - 1e-9));
  Table t{"verdicts", {"level", "generator", "slipping", "universal-slipping", "resolved-to"}, {}};
  int top = std::min(a.max_level, covspec_tower_levels(tower) - 1);
  for (int level = 0; level <= top; ++level) {
    for (std::size_t i = 0; i < covspec_tower_generator_count(tower, level); ++i) {
      const char* name = covspec_tower_generator_name(tower, level, i);
      covspec_verdict slip = COVSPEC_VERDICT_UNDETERMINED, uni = COVSPEC_VERDICT_UNDETERMINED;
      int witness = -1;
      double resolved = 0;
      check(covspec_tower_slipping(tower, level, name, a.eps, &slip, &witness));
      check(covspec_tower_universal_slipping(tower, level, name, delta_max, steps, &uni, &resolved));
      if (slip == COVSPEC_VERDICT_UNDETERMINED || uni == COVSPEC_VERDICT_UNDETERMINED) out.undetermined = true;
      t.rows.push_back({std::to_string(level), name, verdict_name(slip), verdict_name(uni),
                        uni == COVSPEC_YES ? num(resolved) : ""});
    }
  }
  out.tables.push_back(std::move(t));
  covspec_cover_summary s{};
  check(covspec_tower_cover_summary(tower, a.summary_steps, &s));
  std::string slip = s.pi_slip_full ? "full group" : s.pi_slip_trivial ? "trivial" : "proper subgroup";
  out.tables.push_back({"summary",
                        {"pi_slip", "universal-delta-cover", "covspec-inf", "delta-cover", "undetermined"},
                        {{slip, s.quotient_identity, num(s.covspec_inf), s.is_delta_cover ? "true" : "false",
                          std::to_string(s.undetermined)}}});
  if (s.undetermined > 0) out.undetermined = true;
}

Output cmd_slipping(const SlippingArgs& a) {
  if (a.target.size() != 2) throw CliError("usage: slipping preset <name> | graph <file> | tower <file>");
  if (!(a.eps > 0)) throw CliError("--eps must be positive");
  const std::string& kind = a.target[0];
  const std::string& name = a.target[1];
  Output out;
  if (kind == "preset" && name.find("cylinder") != std::string::npos) {
    covspec_cylinder* raw = nullptr;
    check(covspec_cylinder_preset(name.c_str(), &raw));
    CylinderPtr c(raw);
    out.tables.push_back({"verdicts",
                          {"element", "slipping"},
                          {{"g", covspec_cylinder_generator_slipping(c.get()) ? "yes" : "no"}}});
    out.tables.push_back(cylinder_lengths(c.get()));
    return out;
  }
  covspec_tower* raw = nullptr;
  if (kind == "preset") {
    check(covspec_tower_preset(name.c_str(), a.levels, &raw));
  } else if (kind == "tower") {
    check(covspec_tower_load(name.c_str(), &raw));
  } else if (kind == "graph") {
    auto g = load_graph(name, "", 0);
    check(covspec_tower_constant(g.get(), 2, &raw));
  } else {
    throw CliError("unknown slipping source: " + kind);
  }
  TowerPtr t(raw);
  tower_rows(t.get(), a, out);
  return out;
}

struct VerifyArgs {
  std::string suite;
  int samples = 100;
  int graphs = 50;
  std::uint64_t seed = 1;
  std::string preset = "hyperboloid";
};

Output cmd_verify(const VerifyArgs& a) {
  covspec_suite_result r{};
  std::string worst_label;
  if (a.suite == "wilking") {
    check(covspec_verify_wilking(a.samples, a.seed, &r));
    worst_label = "smallest-margin";
  } else if (a.suite == "covofshift") {
    check(covspec_verify_covofshift(a.graphs, a.seed, &r));
    worst_label = "violations";
  } else if (a.suite == "rescaled-lemmas") {
    check(covspec_verify_rescaled_lemmas(a.preset.c_str(), &r));
    worst_label = "largest-deviation";
  } else {
    throw CliError("unknown suite: " + a.suite + " (wilking, covofshift, rescaled-lemmas)");
  }
  Output out;
  out.tables.push_back({"result",
                        {"suite", "result", "checks", "failures", worst_label, "first-failure"},
                        {{a.suite, r.pass ? "pass" : "fail", std::to_string(r.checks), std::to_string(r.failures),
                          num(r.worst), r.message}}});
  return out;
}

// ---- plots ----

struct Series {
  std::string x_label, y_label;
  std::vector<double> x, y;
  bool log_x = false;
  bool step = false;
};

std::string svg_plot(const Series& s, const std::string& title) {
  const double W = 640, H = 400, L = 70, R = 20, T = 40, B = 50;
  auto tx = [&](double x) { return s.log_x ? std::log10(x) : x; };
  double x0 = tx(s.x.front()), x1 = tx(s.x.back());
  double y0 = 0, y1 = 0;
  for (double y : s.y) y1 = std::max(y1, y);
  if (y1 <= y0) y1 = y0 + 1;
  y1 *= 1.1;
  auto px = [&](double x) { return L + (tx(x) - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\">" << title
     << "</text>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    double y = y0 + (y1 - y0) * i / 4;
    os << "<text x=\"" << L - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\" font-size=\"11\">" << num(y)
       << "</text>\n";
    double xv = s.log_x ? std::pow(10.0, x0 + (x1 - x0) * i / 4) : x0 + (x1 - x0) * i / 4;
    os << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" font-size=\"11\">"
       << num(xv) << "</text>\n";
  }
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">" << s.x_label << "</text>\n";
  os << "<text x=\"16\" y=\"" << H / 2 << "\" transform=\"rotate(-90 16 " << H / 2 << ")\" text-anchor=\"middle\">"
     << s.y_label << "</text>\n";
  os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    if (s.step && i > 0) os << px(s.x[i]) << "," << py(s.y[i - 1]) << " ";
    os << px(s.x[i]) << "," << py(s.y[i]) << " ";
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

Output series_output(const Series& s, const std::string& title) {
  Output out;
  Table t{"series", {s.x_label, s.y_label}, {}};
  for (std::size_t i = 0; i < s.x.size(); ++i) t.rows.push_back({num(s.x[i]), num(s.y[i])});
  out.tables.push_back(std::move(t));
  out.svg = svg_plot(s, title);
  return out;
}

struct PlotArgs {
  std::string kind;
  std::string f = "r";
  std::string d = "pi";
  double rmin = 1.0;
  double rmax = 1e4;
  int points = 41;
  std::string preset = "gauss-bump-cylinder";
  std::string graph_file;
};

Output cmd_plot(const PlotArgs& a) {
  if (a.points < 2) throw CliError("--points must be at least 2");
  if (a.kind == "warped-ratio") {
    double d = 0;
    check(covspec_parse_length(a.d.c_str(), &d, nullptr, 0));
    if (!(a.rmin > 0) || !(a.rmax > a.rmin)) throw CliError("need 0 < --rmin < --rmax");
    Series s{"r", "F(r,d)/r", {}, {}, true, false};
    for (int i = 0; i < a.points; ++i) s.x.push_back(a.rmin * std::pow(a.rmax / a.rmin, double(i) / (a.points - 1)));
    s.y.resize(s.x.size());
    check(covspec_warped_ratio(a.f.c_str(), d, s.x.data(), s.x.size(), s.y.data()));
    return series_output(s, "F(r, " + a.d + ")/r for f = " + a.f);
  }
  if (a.kind == "covspec-sweep") {
    SpectrumPtr spec;
    CylinderPtr cyl;
    const covspec_spectrum* s = nullptr;
    if (!a.graph_file.empty()) {
      auto g = load_graph(a.graph_file, "", 0);
      covspec_spectrum* raw = nullptr;
      check(covspec_graph_spectrum(g.get(), nullptr, &raw, nullptr));
      spec.reset(raw);
      s = raw;
    } else {
      covspec_cylinder* raw = nullptr;
      check(covspec_cylinder_preset(a.preset.c_str(), &raw));
      cyl.reset(raw);
      s = covspec_cylinder_spectrum(raw);
    }
    std::vector<double> values;
    for (std::size_t i = 0; i < covspec_spectrum_size(s); ++i) {
      double v = 0;
      check(covspec_spectrum_value(s, i, &v, nullptr, nullptr));
      values.push_back(v);
    }
    double top = 1.0;
    for (double v : values) top = std::max(top, 2 * v);
    Series sw{"delta", "values-below-delta", {}, {}, false, true};
    for (int i = 0; i < a.points; ++i) {
      double x = top * i / (a.points - 1);
      std::size_t below = 0;
      for (double v : values) below += v <= x ? 1 : 0;
      sw.x.push_back(x);
      sw.y.push_back(static_cast<double>(below));
    }
    return series_output(sw, "covering spectrum sweep");
  }
  throw CliError("unknown plot: " + a.kind + " (warped-ratio, covspec-sweep)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering spectra of metric graphs, towers and model spaces"};
  app.set_version_flag("--version", covspec_version());
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "table, csv, json or svg")
      ->check(CLI::IsMember({"table", "csv", "json", "svg"}))
      ->capture_default_str();

  std::string diameters;
  auto* torus = app.add_subcommand("torus", "flat torus from circle diameters");
  torus->add_option("--diameters", diameters, "comma separated expressions")->required();

  std::string graph_file, graph_preset, lmax;
  int graph_param = 3;
  auto* graph = app.add_subcommand("graph", "metric graph file or preset");
  graph->add_option("file", graph_file, "graph file");
  graph->add_option("--preset", graph_preset, "circle, figure8, harmonic-wedge");
  graph->add_option("--param", graph_param, "preset parameter (harmonic-wedge J)")->capture_default_str();
  graph->add_option("--lmax", lmax, "cycle length bound");

  std::string cyl_f, cyl_c = "2*pi";
  int cyl_power = 4;
  auto* cyl = app.add_subcommand("warped-cylinder", "R x_f S^1");
  cyl->add_option("--f", cyl_f, "warp function of r")->required();
  cyl->add_option("--circumference", cyl_c)->capture_default_str();
  cyl->add_option("--max-power", cyl_power)->capture_default_str();

  RescaledArgs ra;
  auto* resc = app.add_subcommand("rescaled", "rescaled covering spectra of model spaces");
  resc->add_option("model", ra.target, "[preset] name, or cone")->required();
  resc->add_option("--which", ra.which, "infinity, basepoint or both")->capture_default_str();
  resc->add_option("--max-power", ra.max_power)->capture_default_str();
  resc->add_flag("--cross-check", ra.cross_check, "sample numerically next to closed forms");
  resc->add_option("--k", ra.k, "cone slope")->capture_default_str();
  resc->add_option("--base-covspec", ra.base_covspec, "cone: CovSpec(Y), comma separated");
  resc->add_option("--base-diameter", ra.base_diameter, "cone: diam(Y)");

  SlippingArgs sa;
  auto* slip = app.add_subcommand("slipping", "slipping verdicts");
  slip->add_option("source", sa.target, "preset <name> | graph <file> | tower <file>")->required();
  slip->add_option("--levels", sa.levels)->capture_default_str();
  slip->add_option("--max-level", sa.max_level, "deepest level whose generators are listed")->capture_default_str();
  slip->add_option("--delta", sa.delta, "smallest delta of the universal test")->capture_default_str();
  slip->add_option("--delta-max", sa.delta_max)->capture_default_str();
  slip->add_option("--eps", sa.eps, "slipping threshold")->capture_default_str();
  slip->add_option("--summary-steps", sa.summary_steps)->capture_default_str();

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "property suites");
  ver->add_option("suite", va.suite, "wilking, covofshift, rescaled-lemmas")->required();
  ver->add_option("--samples", va.samples)->capture_default_str();
  ver->add_option("--random-graphs", va.graphs)->capture_default_str();
  ver->add_option("--seed", va.seed)->capture_default_str();
  ver->add_option("--preset", va.preset)->capture_default_str();

  PlotArgs pa;
  auto* plot = app.add_subcommand("plot", "plot data as csv or svg");
  plot->add_option("kind", pa.kind, "warped-ratio, covspec-sweep")->required();
  plot->add_option("--f", pa.f)->capture_default_str();
  plot->add_option("--d", pa.d)->capture_default_str();
  plot->add_option("--rmin", pa.rmin)->capture_default_str();
  plot->add_option("--rmax", pa.rmax)->capture_default_str();
  plot->add_option("--points", pa.points)->capture_default_str();
  plot->add_option("--preset", pa.preset)->capture_default_str();
  plot->add_option("--graph", pa.graph_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    Output out;
    if (*torus) {
      out = cmd_torus(diameters);
    } else if (*graph) {
      out = cmd_graph(graph_file, graph_preset, graph_param, lmax);
    } else if (*cyl) {
      out = cmd_cylinder(cyl_f, cyl_c, cyl_power);
    } else if (*resc) {
      out = cmd_rescaled(ra);
    } else if (*slip) {
      out = cmd_slipping(sa);
    } else if (*ver) {
      out = cmd_verify(va);
      render(out, common.format, std::cout);
      return out.tables[0].rows[0][1] == "pass" ? kExitOk : kExitError;
    } else if (*plot) {
      out = cmd_plot(pa);
    }
    render(out, common.format, std::cout);
    return out.undetermined ? kExitUndetermined : kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
