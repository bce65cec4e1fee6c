// Serialization of every artifact in the documented JSON schemas:
// hopf.v1, pair.v1, rmatrix.v1, cqt.v1, transmute.v1, plus reports.
#ifndef HOPFYB_JSON_IO_HPP
#define HOPFYB_JSON_IO_HPP

#include <json.hpp>

#include "hopfyb/braiding.hpp"
#include "hopfyb/cqt.hpp"
#include "hopfyb/matched_pair.hpp"
#include "hopfyb/transmutation.hpp"

namespace hopfyb {

using Json = nlohmann::ordered_json;

struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json scalar_matrix_to_json(const Matrix& m);
Matrix scalar_matrix_from_json(const Json& j, int rows, int cols, const std::string& what);
Json tensor3_to_json(const Tensor3& t);
Tensor3 tensor3_from_json(const Json& j, int dim, const std::string& what);

Json hopf_to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const Json& j);

Json pair_to_json(const ActionPair& p);
// resolve maps the "hopf" field (catalog name or path) to an algebra
ActionPair pair_from_json(const Json& j,
                          const std::function<HopfAlgebra(const std::string&)>& resolve);

Json rmatrix_to_json(const BraidingOperator& r);
Matrix rmatrix_from_json(const Json& j, std::string* hopf_name);

Json cqt_form_to_json(const CqtForm& f);
// inverse_form is always recomputed, never read from the file
CqtForm cqt_form_from_json(const Json& j,
                           const std::function<HopfAlgebra(const std::string&)>& resolve);

Json transmutation_to_json(const TransmutationData& t);

Json report_to_json(const AxiomReport& r);

}  // namespace hopfyb

#endif
