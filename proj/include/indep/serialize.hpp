#ifndef INDEP_SERIALIZE_HPP
#define INDEP_SERIALIZE_HPP

#include <json.hpp>

#include "indep/elimination.hpp"
#include "indep/rank.hpp"

namespace indep {

using Json = nlohmann::ordered_json;

// Field descriptors appear in problem files and reports as
// "rational" | "gf(p)" | {"approx": tolerance}.
Json field_to_json(const FieldDescriptor& fd);
FieldDescriptor field_from_json(const Json& j);

// Exact fields serialize scalars as canonical strings ("3/2",
// "5 mod 7") so round trips are bit-exact; ApproxReal uses JSON numbers.
Json scalar_to_json(const Scalar& v, const FieldDescriptor& fd);
Scalar scalar_from_json(const Json& j, const FieldDescriptor& fd);

Json point_to_json(const Point& p, const FieldDescriptor& fd);
Point point_from_json(const Json& j, const FieldDescriptor& fd);

Json matrix_to_json(const Matrix& m, const FieldDescriptor& fd); // row-major flat array
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                        const FieldDescriptor& fd);

Json certificate_to_json(const IndependenceCertificate& cert);
IndependenceCertificate certificate_from_json(const Json& j);

Json witness_to_json(const DependenceWitness& w);
DependenceWitness witness_from_json(const Json& j);

Json rank_result_to_json(const RankResult& r, const std::vector<std::string>& names,
                         const FieldDescriptor& fd);

} // namespace indep

#endif // INDEP_SERIALIZE_HPP
