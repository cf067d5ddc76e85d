#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "orthogrid/cli/cli.hpp"
#include "orthogrid/errors.hpp"
#include "orthogrid/padic/padic.hpp"

namespace orthogrid::cli {
namespace {

using json = nlohmann::json;
using Source = std::vector<std::pair<PrimitiveVector, std::int64_t>>;

EnumerationBudget budget_of(const RunConfig& c) { return EnumerationBudget{c.budget}; }

std::string preamble(const RunConfig& c) {
  return "# orthogrid " + c.command + "\n# config: " + config_json(c) + "\n";
}

bool admissible(const RunConfig& c, const Integer& D) {
  if (!is_admissible(c.d, D)) return false;
  for (std::int64_t p : c.primes)
    if (!is_admissible(c.d, D, p)) return false;
  return true;
}

// ---- reading an earlier CSV stage ----

struct InputStage {
  std::vector<Integer> Ds;               // in order of first appearance
  std::map<Integer, Source> by_D;
  std::map<Integer, std::vector<std::string>> t_columns;  // serialized t per row, when present
};

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, ',')) out.push_back(cur);
  return out;
}

InputStage read_stage(const RunConfig& c) {
  std::ifstream f(c.in, std::ios::binary);
  if (!f) throw DomainError("cannot read " + c.in);
  std::string line;
  std::vector<std::string> header;
  std::string file_mode;
  InputStage in;
  while (std::getline(f, line)) {
    if (line.rfind("# config: ", 0) == 0) {
      const json cfg = json::parse(line.substr(10));
      if (cfg.at("d").get<int>() != c.d) throw DomainError("--d does not match the input artifact");
      file_mode = cfg.at("mode").get<std::string>();
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split_csv(line);
    if (header.empty()) {
      header = cells;
      continue;
    }
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) row[header[i]] = cells[i];
    Coords x;
    for (int i = 1; i <= c.d; ++i) x.push_back(std::stoll(row.at("x" + std::to_string(i))));
    const Integer D(row.at("D"));
    PrimitiveVector v(std::move(x));
    if (v.D() != D) throw DomainError("input row with |v|^2 != D");
    std::int64_t weight = 1;
    if (row.count("weight")) {
      if (file_mode != to_string(c.mode)) throw DomainError("--mode does not match the input artifact");
      weight = std::stoll(row.at("weight"));
    } else if (c.mode == SampleMode::orbit) {
      // An enumerate stage lists every vector; keep one per orbit.
      const OrbitInfo info = orbit_info(v);
      if (!(info.canonical_rep == v)) continue;
      weight = info.orbit_size;
    }
    if (!in.by_D.count(D)) in.Ds.push_back(D);
    if (row.count("t1")) {
      std::string t;
      for (int i = 1; i < c.d; ++i) t += (i > 1 ? "," : "") + row.at("t" + std::to_string(i));
      in.t_columns[D].push_back(t);
    }
    in.by_D[D].emplace_back(std::move(v), weight);
  }
  if (header.empty()) throw DomainError("input artifact " + c.in + " has no header row");
  return in;
}

Source enumerate_source(const RunConfig& c, const Integer& D) {
  Source src;
  if (c.mode == SampleMode::raw) {
    for (auto& v : enumerate_sphere(c.d, D, budget_of(c))) src.emplace_back(std::move(v), 1);
  } else {
    for (auto& v : enumerate_orbit_reps(c.d, D, budget_of(c))) {
      const std::int64_t size = orbit_info(v).orbit_size;
      src.emplace_back(std::move(v), size);
    }
  }
  return src;
}

// Batches for every configured D, from the input stage or by enumeration.
std::vector<SampleBatch> batches(const RunConfig& c) {
  std::vector<SampleBatch> out;
  if (!c.in.empty()) {
    const InputStage in = read_stage(c);
    for (const auto& D : in.Ds) {
      SampleBatch b = make_batch(c.d, D, c.mode, in.by_D.at(D));
      if (auto it = in.t_columns.find(D); it != in.t_columns.end()) {
        for (std::size_t i = 0; i < b.records.size(); ++i) {
          std::string t;
          for (std::size_t k = 0; k < b.records[i].t.size(); ++k) t += (k ? "," : "") + to_string(b.records[i].t[k]);
          if (t != it->second[i]) throw InvariantViolation("recomputed marked point differs from the input artifact");
        }
      }
      out.push_back(std::move(b));
    }
    return out;
  }
  for (const auto& D : c.Ds) out.push_back(make_batch(c.d, D, c.mode, enumerate_source(c, D)));
  return out;
}

// ---- enumerate ----

std::string cmd_enumerate(const RunConfig& c, std::ostream& log) {
  std::ostringstream os;
  os << preamble(c);
  os << "d,D";
  for (int i = 1; i <= c.d; ++i) os << ",x" << i;
  os << ",orbit_id,stab_size\n";
  for (const auto& D : c.Ds) {
    const bool ok = admissible(c, D);
    const auto vectors = enumerate_sphere(c.d, D, budget_of(c));
    if (!ok) {
      log << "warning: D=" << D.get_str() << " is inadmissible for d=" << c.d << "\n";
      os << "# warning: D=" << D.get_str() << " inadmissible for d=" << c.d << "\n";
      os << "# admissible: false (D=" << D.get_str() << ")\n";
    }
    if (vectors.empty() && ok)
      throw InvariantViolation("admissible D=" + D.get_str() + " has an empty sphere for d=" + std::to_string(c.d));
    std::map<Coords, std::size_t> ids;
    for (const auto& r : enumerate_orbit_reps(c.d, D, budget_of(c))) ids.emplace(r.coords(), ids.size());
    for (const auto& v : vectors) {
      const OrbitInfo info = orbit_info(v);
      os << c.d << ',' << D.get_str();
      for (std::int64_t x : v.coords()) os << ',' << x;
      os << ',' << ids.at(info.canonical_rep.coords()) << ',' << info.stabilizer_size << '\n';
    }
  }
  return seal_csv(os.str());
}

// ---- shapes / grids ----

std::string cmd_classes(const RunConfig& c, bool with_grid) {
  const std::size_t n = static_cast<std::size_t>(c.d - 1);
  std::ostringstream os;
  os << preamble(c);
  os << "d,D";
  for (int i = 1; i <= c.d; ++i) os << ",x" << i;
  os << ",weight,canonical";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) os << ",g" << i + 1 << j + 1;
  if (with_grid)
    for (std::size_t i = 1; i <= n; ++i) os << ",t" << i;
  if (c.d == 3) os << ",modular_x,modular_y2";
  os << '\n';
  for (const auto& b : batches(c)) {
    for (const auto& r : b.records) {
      os << c.d << ',' << b.D.get_str();
      for (std::int64_t x : r.v) os << ',' << x;
      os << ',' << r.weight << ',' << (r.shape.canonical ? 1 : 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) os << ',' << r.shape.gram(i, j).get_str();
      if (with_grid)
        for (const auto& q : r.t) os << ',' << to_string(q);
      if (r.modular) os << ',' << to_string(r.modular->x) << ',' << to_string(r.modular->y2);
      os << '\n';
    }
  }
  return seal_csv(os.str());
}

// ---- genus-check ----

json control_row(const std::string& name, const IntMatrix& m, std::int64_t p) {
  json row;
  row["form"] = name;
  row["p"] = p;
  row["det"] = determinant(m).get_str();
  row["hasse"] = hasse_invariant(m, p);
  row["isotropic"] = is_isotropic(m, p);
  row["control"] = "non-sphere form, excluded from the violation count";
  return row;
}

IntMatrix diagonal(const std::vector<long>& a) {
  IntMatrix m(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m(i, i) = a[i];
  return m;
}

std::string cmd_genus_check(const RunConfig& c, std::ostream& log) {
  json rows = json::array();
  json skipped = json::array();
  std::int64_t violations = 0;
  const bool hasse_claim = c.d == 4 || c.d == 5;
  const bool isotropy_claim = c.d >= 4;
  for (const auto& D : c.Ds) {
    const auto reps = enumerate_orbit_reps(c.d, D, budget_of(c));
    std::vector<IntMatrix> grams;
    std::vector<std::int64_t> weights;
    for (const auto& v : reps) {
      grams.push_back(gram_form(ortho_frame(v)).M);
      weights.push_back(orbit_info(v).orbit_size);
    }
    for (std::int64_t p : c.primes) {
      if (D % p == 0) {
        skipped.push_back({{"D", D.get_str()}, {"p", p}, {"reason", "p divides D"}});
        continue;
      }
      std::int64_t points = 0, hasse_bad = 0, aniso = 0;
      json examples = json::array();
      for (std::size_t i = 0; i < grams.size(); ++i) {
        points += weights[i];
        const int h = hasse_invariant(grams[i], p);
        const bool iso = is_isotropic(grams[i], p);
        if (h != 1) ++hasse_bad;
        if (!iso) ++aniso;
        const bool bad = (hasse_claim && h != 1) || (isotropy_claim && !iso);
        if (bad) {
          ++violations;
          if (examples.size() < 5) examples.push_back(to_string(reps[i].to_integer()));
        }
      }
      rows.push_back({{"D", D.get_str()},
                      {"p", p},
                      {"orbits", grams.size()},
                      {"points", points},
                      {"hasse_minus_one", hasse_bad},
                      {"anisotropic", aniso},
                      {"violating_orbits", examples}});
    }
  }
  json controls = json::array();
  for (std::int64_t p : c.primes) {
    const long pl = static_cast<long>(p);
    const long eps = static_cast<long>(smallest_nonresidue(p));
    controls.push_back(control_row("diag(1,1,1,p)", diagonal({1, 1, 1, pl}), p));
    controls.push_back(control_row("diag(1,-r,p,-rp)", diagonal({1, -eps, pl, -eps * pl}), p));
  }
  json j;
  j["config"] = json::parse(config_json(c));
  j["claims"] = {{"hasse_is_one", hasse_claim}, {"isotropic", isotropy_claim}};
  j["rows"] = rows;
  j["skipped"] = skipped;
  j["controls"] = controls;
  j["violations"] = violations;
  if (violations > 0) {
    log << "genus-check: " << violations << " violations\n";
    throw InvariantViolation("genus-check found " + std::to_string(violations) + " violations:\n" + seal_json(j.dump()));
  }
  return seal_json(j.dump());
}

// ---- stats / report ----

json report_json(const StatReport& r) {
  json j;
  j["d"] = r.d;
  j["D"] = r.D.get_str();
  j["mode"] = to_string(r.mode);
  j["n_points"] = r.n_points;
  j["n_records"] = r.n_records;
  j["cap_discrepancy"] = r.cap_discrepancy;
  j["torus_ks"] = r.torus.ks;
  j["torus_pair_chi2"] = r.torus.pair_chi2;
  j["shape_chi2"] = r.shape ? json(r.shape->distance) : json(nullptr);
  if (r.shape) j["shape_cells"] = r.shape->counts;
  j["lambda1_mean"] = r.lambda1_mean ? json(*r.lambda1_mean) : json(nullptr);
  j["joint_chi2"] = r.joint ? json(*r.joint) : json(nullptr);
  j["seeds"] = {{"caps", r.cap_seed}};
  j["cap_count"] = r.cap_count;
  if (r.d >= 4) j["note"] = "shape marginal for d >= 4 is tracked through lambda1_mean only";
  return j;
}

std::vector<StatReport> reports(const RunConfig& c) {
  std::vector<StatReport> out;
  for (const auto& b : batches(c)) {
    if (b.n_points() < kMinTorusPoints)
      throw DomainError("D=" + b.D.get_str() + " has " + std::to_string(b.n_points()) + " points, need at least " +
                        std::to_string(kMinTorusPoints));
    out.push_back(compute_report(b, c.caps, c.seed));
  }
  return out;
}

json trend(const std::string& name, const std::vector<double>& values) {
  bool monotone = true;
  for (std::size_t i = 1; i < values.size(); ++i) monotone = monotone && values[i] < values[i - 1];
  return {{"metric", name},
          {"values", values},
          {"first_to_last_decrease", values.size() >= 2 && values.back() < values.front()},
          {"strictly_monotone", values.size() >= 2 && monotone}};
}

std::string cmd_stats(const RunConfig& c, bool with_trend) {
  const auto reps = reports(c);
  json j;
  j["config"] = json::parse(config_json(c));
  j["reports"] = json::array();
  for (const auto& r : reps) j["reports"].push_back(report_json(r));
  if (with_trend) {
    json t = json::array();
    std::vector<double> cap;
    for (const auto& r : reps) cap.push_back(r.cap_discrepancy);
    t.push_back(trend("cap_discrepancy", cap));
    const std::size_t axes = static_cast<std::size_t>(c.d - 1);
    for (std::size_t a = 0; a < axes; ++a) {
      std::vector<double> ks;
      for (const auto& r : reps) ks.push_back(r.torus.ks.at(a));
      t.push_back(trend("torus_ks_" + std::to_string(a + 1), ks));
    }
    if (c.d == 3) {
      std::vector<double> sh;
      for (const auto& r : reps)
        if (r.shape) sh.push_back(r.shape->distance);
      if (sh.size() == reps.size()) t.push_back(trend("shape_chi2", sh));
    }
    j["trend"] = t;
  }
  return seal_json(j.dump());
}

}  // namespace

std::string execute(const RunConfig& c, std::ostream& log) {
  if (c.command == "enumerate") return cmd_enumerate(c, log);
  if (c.command == "shapes") return cmd_classes(c, false);
  if (c.command == "grids") return cmd_classes(c, true);
  if (c.command == "genus-check") return cmd_genus_check(c, log);
  if (c.command == "stats") return cmd_stats(c, false);
  if (c.command == "report") return cmd_stats(c, true);
  throw DomainError("unknown command " + c.command);
}

}  // namespace orthogrid::cli
