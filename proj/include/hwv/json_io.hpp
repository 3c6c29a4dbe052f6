#ifndef HWV_JSON_IO_HPP
#define HWV_JSON_IO_HPP

#include <json.hpp>

#include "hwv/lifting.hpp"
#include "hwv/occurrence.hpp"

namespace hwv {

using Json = nlohmann::json;

// Partitions: [5,3,1]; parts beyond the int64 range travel as strings.
Json toJson(const Partition& p);
Partition partitionFromJson(const Json& j);

// Tableaux: {"shape":[...], "d":..., "n":..., "rows":[[1,1,2],[2]]}.
Json toJson(const Tableau& t);
Tableau tableauFromJson(const Json& j);

// Polynomials: [{"exp":{"1":2,"3":1},"coef":"1/2"}, ...].
Json toJson(const SymPoly& p);
SymPoly symPolyFromJson(const Json& j);

// Points: {"pad":e,"s":s,"summands":[{"coef":"...","vec":{"1":"2"}}]}.
Json toJson(const PowerSumPoint& pt);
PowerSumPoint powerSumPointFromJson(const Json& j);

Json toJson(const Block& b);
Block blockFromJson(const Json& j);

Json toJson(const Certificate& c);
Certificate certificateFromJson(const Json& j);

Json toJson(const BranchReport& r);

}  // namespace hwv

#endif
