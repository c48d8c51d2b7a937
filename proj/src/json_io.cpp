#include "ramsey/json_io.hpp"

namespace ramsey {

Json dyadic_to_json(const Dyadic& d) {
  Json j;
  const mpz_class num = d.numerator();
  if (num.fits_slong_p())
    j["num"] = static_cast<std::int64_t>(num.get_si());
  else
    j["num"] = num.get_str();
  j["exp"] = d.exponent();
  return j;
}

Dyadic dyadic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("exp"))
    throw ConfigError("dyadic JSON needs num and exp");
  mpz_class num;
  if (j["num"].is_string())
    num = mpz_class(j["num"].get<std::string>(), 10);
  else
    num = mpz_class(static_cast<long>(j["num"].get<std::int64_t>()));
  return Dyadic::scaled(num, j["exp"].get<std::uint64_t>());
}

Json point_to_json(const Space& sp, const Point& p) {
  switch (sp.kind()) {
    case Space::Kind::UnitCube: {
      Json arr = Json::array();
      for (const Dyadic& d : p.cube_coords()) arr.push_back(dyadic_to_json(d));
      return arr;
    }
    case Space::Kind::OmegaPlusOne:
      if (!p.omega_value()) return Json("inf");
      return Json(*p.omega_value());
    case Space::Kind::FiniteDiscrete:
      return Json(p.discrete_value());
    case Space::Kind::Cantor: {
      Json j;
      j["bits"] = p.cantor_point().prefix;
      j["tail"] = p.cantor_point().tail;
      return j;
    }
    case Space::Kind::Product:
    case Space::Kind::OmegaPower: {
      Json arr = Json::array();
      const auto& cs = p.tuple_coords();
      for (std::size_t i = 0; i < cs.size(); ++i)
        arr.push_back(point_to_json(sp.coordinate_space(i), cs[i]));
      return arr;
    }
  }
  throw Error("unreachable");
}

Point point_from_json(const Space& sp, const Json& j) {
  switch (sp.kind()) {
    case Space::Kind::UnitCube: {
      if (!j.is_array() || j.size() != sp.cube_dim())
        throw ConfigError("cube point JSON must be an array of dim coordinates");
      std::vector<Dyadic> coords;
      for (const Json& el : j) coords.push_back(dyadic_from_json(el));
      return Point::cube(std::move(coords));
    }
    case Space::Kind::OmegaPlusOne:
      if (j.is_string() && j.get<std::string>() == "inf") return Point::omega_infinity();
      if (!j.is_number_unsigned()) throw ConfigError("omega1 point must be a natural or \"inf\"");
      return Point::omega(j.get<Nat>());
    case Space::Kind::FiniteDiscrete:
      if (!j.is_number_unsigned()) throw ConfigError("discrete point must be a natural");
      return Point::discrete(j.get<Nat>());
    case Space::Kind::Cantor: {
      if (!j.is_object()) throw ConfigError("cantor point must be {bits, tail}");
      std::vector<std::uint8_t> bits = j.at("bits").get<std::vector<std::uint8_t>>();
      return Point::cantor(std::move(bits), j.at("tail").get<std::uint8_t>());
    }
    case Space::Kind::Product:
    case Space::Kind::OmegaPower: {
      if (!j.is_array()) throw ConfigError("product point must be an array");
      if (sp.kind() == Space::Kind::Product && j.size() != sp.factors().size())
        throw ConfigError("product point has the wrong number of coordinates");
      Point::TupleCoords cs;
      for (std::size_t i = 0; i < j.size(); ++i)
        cs.push_back(point_from_json(sp.coordinate_space(i), j[i]));
      return Point::tuple(std::move(cs)).normalized(sp);
    }
  }
  throw Error("unreachable");
}

namespace {

Json fuel_report_to_json(const FuelReport& rep) {
  Json j;
  j["oracle_calls"] = rep.oracle_calls;
  j["oracle_budget"] = rep.oracle_budget;
  j["stream_budget"] = rep.stream_budget;
  j["pigeonhole_policy"] = "first-to-target";
  j["pigeonhole_target"] = rep.pigeonhole_target;
  j["deepest_level"] = rep.deepest_level;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

FuelReport fuel_report_from_json(const Json& j) {
  FuelReport rep;
  rep.oracle_calls = j.value("oracle_calls", std::uint64_t(0));
  rep.oracle_budget = j.value("oracle_budget", std::uint64_t(0));
  rep.stream_budget = j.value("stream_budget", std::uint64_t(0));
  rep.pigeonhole_target = j.value("pigeonhole_target", std::uint64_t(0));
  rep.deepest_level = j.value("deepest_level", std::uint32_t(0));
  rep.note = j.value("note", std::string());
  return rep;
}

void cert_fields_to_json(const Space& sp, const ConvergenceCertificate& cert, Json& j) {
  j["engine"] = cert.engine;
  j["stream_prefix"] = cert.stream_prefix;
  Json centers = Json::array();
  for (const Point& c : cert.limit_centers) centers.push_back(point_to_json(sp, c));
  j["limit_centers"] = std::move(centers);
  Json levels = Json::array();
  for (const LevelClaim& claim : cert.levels) {
    Json l;
    l["n"] = claim.level;
    l["threshold"] = claim.threshold;
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  j["fuel_report"] = fuel_report_to_json(cert.fuel_report);
  if (cert.partial) j["partial"] = true;
}

ConvergenceCertificate cert_fields_from_json(const Space& sp, const Json& j) {
  ConvergenceCertificate cert;
  cert.engine = j.at("engine").get<std::string>();
  cert.stream_prefix = j.at("stream_prefix").get<std::vector<Nat>>();
  for (const Json& el : j.at("limit_centers"))
    cert.limit_centers.push_back(point_from_json(sp, el));
  for (const Json& el : j.at("levels")) {
    LevelClaim claim;
    claim.level = el.at("n").get<std::uint32_t>();
    claim.threshold = el.at("threshold").get<std::size_t>();
    cert.levels.push_back(claim);
  }
  if (j.contains("fuel_report")) cert.fuel_report = fuel_report_from_json(j["fuel_report"]);
  cert.partial = j.value("partial", false);
  return cert;
}

}  // namespace

Json certificate_to_json(const Space& sp, const ConvergenceCertificate& cert) {
  Json j;
  cert_fields_to_json(sp, cert, j);
  return j;
}

ConvergenceCertificate certificate_from_json(const Space& sp, const Json& j) {
  return cert_fields_from_json(sp, j);
}

Json product_to_json(const Space& sp, const ConvergenceCertificate& cert,
                     const std::vector<ConvergenceCertificate>& coords) {
  Json j;
  cert_fields_to_json(sp, cert, j);
  Json arr = Json::array();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Json c;
    cert_fields_to_json(sp.coordinate_space(i), coords[i], c);
    c["coordinate"] = i;
    arr.push_back(std::move(c));
  }
  j["coordinates"] = std::move(arr);
  return j;
}

void product_from_json(const Space& sp, const Json& j, ConvergenceCertificate& cert,
                       std::vector<ConvergenceCertificate>& coords) {
  cert = cert_fields_from_json(sp, j);
  coords.clear();
  if (!j.contains("coordinates")) return;
  std::size_t i = 0;
  for (const Json& el : j["coordinates"])
    coords.push_back(cert_fields_from_json(sp.coordinate_space(i++), el));
}

Json nice_to_json(const Space& sp, const NiceSystem& sys) {
  Json j;
  cert_fields_to_json(sp, sys.cert, j);
  j["arity"] = sys.arity;
  Json sections = Json::array();
  for (const NiceSystem::Section& sec : sys.sections) {
    Json s;
    s["tuple"] = sec.tuple;
    Json centers = Json::array();
    for (const Point& c : sec.limit_centers) centers.push_back(point_to_json(sp, c));
    s["limit_centers"] = std::move(centers);
    Json levels = Json::array();
    for (const LevelClaim& claim : sec.levels) {
      Json l;
      l["n"] = claim.level;
      l["threshold"] = claim.threshold;
      levels.push_back(std::move(l));
    }
    s["levels"] = std::move(levels);
    sections.push_back(std::move(s));
  }
  j["sections"] = std::move(sections);
  j["g_system"] = sys.g_system ? nice_to_json(sp, *sys.g_system) : Json(nullptr);
  return j;
}

NiceSystem nice_from_json(const Space& sp, const Json& j) {
  NiceSystem sys;
  sys.cert = cert_fields_from_json(sp, j);
  sys.arity = j.at("arity").get<unsigned>();
  for (const Json& el : j.at("sections")) {
    NiceSystem::Section sec;
    sec.tuple = el.at("tuple").get<std::vector<Nat>>();
    for (const Json& c : el.at("limit_centers"))
      sec.limit_centers.push_back(point_from_json(sp, c));
    for (const Json& l : el.at("levels")) {
      LevelClaim claim;
      claim.level = l.at("n").get<std::uint32_t>();
      claim.threshold = l.at("threshold").get<std::size_t>();
      sec.levels.push_back(claim);
    }
    sys.sections.push_back(std::move(sec));
  }
  if (!j.at("g_system").is_null())
    sys.g_system = std::make_shared<NiceSystem>(nice_from_json(sp, j["g_system"]));
  return sys;
}

Json tree_to_json(const SplittingTree& t) {
  Json j;
  j["branching"] = t.branching;
  j["depth"] = t.depth;
  Json nodes = Json::array();
  for (const auto& node : t.nodes) nodes.push_back(node);
  j["nodes"] = std::move(nodes);
  return j;
}

Json tuple_set_to_json(const TupleSet& s) {
  Json arr = Json::array();
  for (const auto& t : s.elems) arr.push_back(t);
  return arr;
}

TupleSet tuple_set_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("tuple set must be an array of integer arrays");
  TupleSet out;
  bool first = true;
  for (const Json& el : j) {
    if (!el.is_array()) throw ConfigError("tuple set must be an array of integer arrays");
    std::vector<Nat> t = el.get<std::vector<Nat>>();
    if (first) {
      if (t.empty()) throw ConfigError("tuple set entries must be nonempty");
      out.dim = static_cast<unsigned>(t.size());
      first = false;
    }
    out.elems.insert(std::move(t));
  }
  if (first) throw ConfigError("tuple set must be nonempty");
  out.check_dims();
  return out;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json j;
  j["ok"] = r.ok;
  if (!r.ok) {
    j["reason"] = r.reason;
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    if (r.level >= 0) j["level"] = r.level;
  }
  return j;
}

}  // namespace ramsey
