#include "linea/io.hpp"

#include <fstream>

namespace linea {

namespace {
const MonomialOrder kOrd = MonomialOrder::grevlex();
}

Json ideal_to_json(const Ideal& I) {
  Json j;
  j["n"] = I.nvars - 1;
  j["generators"] = Json::array();
  for (const auto& g : I.canonicalized(kOrd).gens)
    j["generators"].push_back(g.to_string());
  return j;
}

Ideal ideal_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("generators"))
    throw input_error("ideal JSON needs fields 'n' and 'generators'");
  int nv = int(j.at("n")) + 1;
  std::vector<Polynomial> gens;
  for (const auto& s : j.at("generators"))
    gens.push_back(Polynomial::parse(s.get<std::string>(), nv, kOrd));
  return Ideal(nv, std::move(gens));
}

namespace {

Json points_json(const std::array<std::vector<Rat>, 2>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) {
    Json row = Json::array();
    for (const auto& c : p) row.push_back(rat_to_string(c));
    out.push_back(row);
  }
  return out;
}

std::vector<Rat> point_from_json(const Json& j) {
  std::vector<Rat> p;
  for (const auto& c : j) p.push_back(parse_rat(c.get<std::string>()));
  return p;
}

}  // namespace

Json arrangement_to_json(const LineArrangement& A) {
  Json j;
  j["n"] = A.n;
  Json prov;
  switch (A.prov.kind) {
    case Provenance::Kind::generic:
      prov["kind"] = "generic";
      prov["seed"] = A.prov.seed;
      break;
    case Provenance::Kind::staircase:
      prov["kind"] = "staircase";
      prov["seed"] = A.prov.seed;
      break;
    case Provenance::Kind::named:
      prov["kind"] = "named";
      prov["id"] = A.prov.id;
      if (A.prov.id == "five_p6") {
        prov["a"] = rat_to_string(A.prov.a);
        prov["b"] = rat_to_string(A.prov.b);
      }
      break;
  }
  j["provenance"] = prov;
  j["lines"] = Json::array();
  for (const auto& line : A.lines) {
    Json lj;
    lj["forms"] = Json::array();
    for (const auto& f : line.forms) lj["forms"].push_back(f.to_string());
    if (line.span_points) lj["points"] = points_json(*line.span_points);
    j["lines"].push_back(lj);
  }
  return j;
}

LineArrangement arrangement_from_json(const Json& j) {
  LineArrangement A;
  A.n = j.at("n");
  const Json& prov = j.at("provenance");
  std::string kind = prov.at("kind");
  if (kind == "generic") {
    A.prov.kind = Provenance::Kind::generic;
    A.prov.seed = prov.value("seed", 0ULL);
  } else if (kind == "staircase") {
    A.prov.kind = Provenance::Kind::staircase;
    A.prov.seed = prov.value("seed", 0ULL);
  } else if (kind == "named") {
    A.prov.kind = Provenance::Kind::named;
    A.prov.id = prov.at("id");
    if (prov.contains("a")) A.prov.a = parse_rat(prov.at("a"));
    if (prov.contains("b")) A.prov.b = parse_rat(prov.at("b"));
  } else {
    throw input_error("unknown provenance kind: " + kind);
  }
  int nv = A.n + 1;
  for (const auto& lj : j.at("lines")) {
    Line line;
    for (const auto& s : lj.at("forms"))
      line.forms.push_back(Polynomial::parse(s.get<std::string>(), nv, kOrd));
    if (lj.contains("points")) {
      const Json& pts = lj.at("points");
      line.span_points = {point_from_json(pts.at(0)), point_from_json(pts.at(1))};
    }
    A.lines.push_back(std::move(line));
  }
  return A;
}

Json filtration_to_json(const Filtration& F) {
  Json j;
  j["ideals"] = Json::array();
  for (const auto& fi : F.ideals) {
    Json e;
    e["id"] = fi.id;
    e["gens"] = Json::array();
    for (const auto& g : fi.gens) e["gens"].push_back(g.to_string());
    j["ideals"].push_back(e);
  }
  j["steps"] = Json::array();
  for (const auto& st : F.steps) {
    Json e;
    e["ideal"] = st.ideal;
    e["sub"] = st.sub;
    e["gen"] = st.gen.to_string();
    e["colon"] = st.colon;
    j["steps"].push_back(e);
  }
  return j;
}

Filtration filtration_from_json(const Json& j, int nvars) {
  int nv = nvars;
  if (nv == 0) {
    // Infer the ambient size: the maximal ideal mentions every variable.
    for (const auto& e : j.at("ideals"))
      for (const auto& s : e.at("gens")) {
        std::string text = s.get<std::string>();
        std::size_t pos = 0;
        while ((pos = text.find('x', pos)) != std::string::npos) {
          std::size_t k = ++pos;
          while (k < text.size() && std::isdigit((unsigned char)text[k])) ++k;
          if (k > pos) nv = std::max(nv, std::stoi(text.substr(pos, k - pos)) + 1);
          pos = k;
        }
      }
  }
  Filtration F;
  F.nvars = nv;
  for (const auto& e : j.at("ideals")) {
    FiltrationIdeal fi;
    fi.id = e.at("id");
    for (const auto& s : e.at("gens"))
      fi.gens.push_back(Polynomial::parse(s.get<std::string>(), nv, kOrd));
    F.ideals.push_back(std::move(fi));
  }
  for (const auto& e : j.at("steps")) {
    FiltrationStep st;
    st.ideal = e.at("ideal");
    st.sub = e.at("sub");
    st.colon = e.at("colon");
    st.gen = Polynomial::parse(e.at("gen").get<std::string>(), nv, kOrd);
    F.steps.push_back(std::move(st));
  }
  return F;
}

Json betti_to_json(const BettiTable& t) {
  Json j;
  j["imax"] = t.imax;
  j["jmax"] = t.jmax;
  j["truncated"] = t.truncated;
  j["exact"] = t.used_exact;
  j["entries"] = Json::array();
  for (const auto& [key, val] : t.entries) {
    Json e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["beta"] = val;
    j["entries"].push_back(e);
  }
  if (!t.truncated) {
    j["pdim"] = pdim_of(t);
    j["reg"] = reg_of(t);
  }
  return j;
}

Json profile_to_json(const HilbertProfile& p) {
  Json j;
  Json vals = Json::array();
  for (const auto& [d, v] : p.values) {
    (void)d;
    vals.push_back(v);
  }
  j["values"] = vals;
  if (p.series) j["series"] = p.series->to_string();
  j["method"] = p.source;
  return j;
}

Json classification_to_json(const Classification& c) {
  Json j;
  j["verdict"] = verdict_to_string(c.verdict);
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

Json filtration_report_to_json(const FiltrationReport& r) {
  Json j;
  j["accepted"] = r.accepted;
  j["ideals"] = r.ideal_count;
  j["structural_errors"] = r.structural_errors;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json e;
    e["ideal"] = s.ideal;
    e["sub"] = s.sub;
    e["colon"] = s.colon;
    e["span_ok"] = s.span_ok;
    e["colon_ok"] = s.colon_ok;
    if (!s.note.empty()) e["note"] = s.note;
    steps.push_back(e);
  }
  j["steps"] = steps;
  return j;
}

Json claims_report_to_json(const ClaimsReport& r) {
  Json j;
  j["all_ok"] = r.all_ok;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json e;
    e["name"] = row.name;
    e["claimed"] = row.claimed;
    e["measured"] = row.measured;
    e["ok"] = row.ok;
    rows.push_back(e);
  }
  j["rows"] = rows;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace linea
