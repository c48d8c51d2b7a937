#pragma once

#include <json.hpp>

#include "ramsey/engine.hpp"
#include "ramsey/fin_ideal.hpp"

namespace ramsey {

using Json = nlohmann::json;

Json dyadic_to_json(const Dyadic& d);
Dyadic dyadic_from_json(const Json& j);

// Points serialize space-guided: integers for omega-coordinates, "inf" for
// the point at infinity, {"num","exp"} objects for dyadics, arrays for
// tuples, so exactness survives the wire.
Json point_to_json(const Space& sp, const Point& p);
Point point_from_json(const Space& sp, const Json& j);

Json certificate_to_json(const Space& sp, const ConvergenceCertificate& cert);
ConvergenceCertificate certificate_from_json(const Space& sp, const Json& j);

Json product_to_json(const Space& sp, const ConvergenceCertificate& cert,
                     const std::vector<ConvergenceCertificate>& coords);
void product_from_json(const Space& sp, const Json& j, ConvergenceCertificate& cert,
                       std::vector<ConvergenceCertificate>& coords);

Json nice_to_json(const Space& sp, const NiceSystem& sys);
NiceSystem nice_from_json(const Space& sp, const Json& j);

Json tree_to_json(const SplittingTree& t);
Json tuple_set_to_json(const TupleSet& s);
TupleSet tuple_set_from_json(const Json& j);

Json verify_report_to_json(const VerifyReport& r);

}  // namespace ramsey
