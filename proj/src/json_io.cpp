#include "hopfyb/json_io.hpp"

namespace hopfyb {

namespace {

Scalar parse_entry(const Json& j, const std::string& what) {
    if (!j.is_string()) throw schema_error(what + ": scalar entries must be strings");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const parse_error& e) {
        throw schema_error(what + ": " + e.what());
    }
}

void expect_schema(const Json& j, const std::string& id) {
    if (j.contains("schema") && j["schema"] != id)
        throw schema_error("expected schema " + id + ", found " +
                           j["schema"].dump());
}

bool uses_parameter(const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_constant()) return true;
    return false;
}

bool uses_parameter(const Tensor3& t) {
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k)
                if (!t.at(i, j, k).is_constant()) return true;
    return false;
}

}  // namespace

Json scalar_matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix scalar_matrix_from_json(const Json& j, int rows, int cols, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw schema_error(what + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
            throw schema_error(what + ": row " + std::to_string(r) + " must have " +
                               std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) m.at(r, c) = parse_entry(j[r][c], what);
    }
    return m;
}

Json tensor3_to_json(const Tensor3& t) {
    Json out = Json::array();
    for (int i = 0; i < t.dim(); ++i) {
        Json plane = Json::array();
        for (int j = 0; j < t.dim(); ++j) {
            Json row = Json::array();
            for (int k = 0; k < t.dim(); ++k) row.push_back(t.at(i, j, k).str());
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

Tensor3 tensor3_from_json(const Json& j, int dim, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw schema_error(what + ": expected a " + std::to_string(dim) + "^3 tensor");
    Tensor3 t(dim);
    for (int i = 0; i < dim; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != dim)
            throw schema_error(what + ": bad tensor shape");
        for (int jj = 0; jj < dim; ++jj) {
            if (!j[i][jj].is_array() || static_cast<int>(j[i][jj].size()) != dim)
                throw schema_error(what + ": bad tensor shape");
            for (int k = 0; k < dim; ++k) t.at(i, jj, k) = parse_entry(j[i][jj][k], what);
        }
    }
    return t;
}

Json hopf_to_json(const HopfAlgebra& h) {
    Json j;
    j["schema"] = "hopf.v1";
    j["name"] = h.name;
    j["dim"] = h.dim;
    j["basis"] = h.basis_names;
    j["mult"] = tensor3_to_json(h.mult);
    Json unit = Json::array(), counit = Json::array();
    for (int i = 0; i < h.dim; ++i) {
        unit.push_back(h.unit[i].str());
        counit.push_back(h.counit[i].str());
    }
    j["unit"] = std::move(unit);
    // row i = Delta(e_i) flattened
    Json comult = Json::array();
    for (int i = 0; i < h.dim; ++i) {
        Json row = Json::array();
        for (int pq = 0; pq < h.dim * h.dim; ++pq) row.push_back(h.comult.at(pq, i).str());
        comult.push_back(std::move(row));
    }
    j["comult"] = std::move(comult);
    j["counit"] = std::move(counit);
    j["antipode"] = scalar_matrix_to_json(h.antipode);
    if (uses_parameter(h.mult) || uses_parameter(h.comult) || uses_parameter(h.antipode))
        j["parameters"] = Json::array({"a"});
    return j;
}

HopfAlgebra hopf_from_json(const Json& j) {
    expect_schema(j, "hopf.v1");
    for (const char* key : {"name", "dim", "basis", "mult", "unit", "comult", "counit", "antipode"})
        if (!j.contains(key)) throw schema_error(std::string("hopf.v1: missing field ") + key);
    HopfAlgebra h;
    h.name = j["name"].get<std::string>();
    h.dim = j["dim"].get<int>();
    if (h.dim <= 0 || h.dim > 256) throw schema_error("hopf.v1: unreasonable dimension");
    h.basis_names = j["basis"].get<std::vector<std::string>>();
    h.mult = tensor3_from_json(j["mult"], h.dim, "mult");
    if (static_cast<int>(j["unit"].size()) != h.dim) throw schema_error("hopf.v1: unit size");
    if (static_cast<int>(j["counit"].size()) != h.dim) throw schema_error("hopf.v1: counit size");
    h.unit.resize(h.dim);
    h.counit.resize(h.dim);
    for (int i = 0; i < h.dim; ++i) {
        h.unit[i] = parse_entry(j["unit"][i], "unit");
        h.counit[i] = parse_entry(j["counit"][i], "counit");
    }
    Matrix comult_rows = scalar_matrix_from_json(j["comult"], h.dim, h.dim * h.dim, "comult");
    h.comult = comult_rows.transpose();
    h.antipode = scalar_matrix_from_json(j["antipode"], h.dim, h.dim, "antipode");
    h.check_shapes();
    return h;
}

Json pair_to_json(const ActionPair& p) {
    Json j;
    j["schema"] = "pair.v1";
    j["hopf"] = p.hopf->name;
    j["left"] = tensor3_to_json(p.left);
    j["right"] = tensor3_to_json(p.right);
    return j;
}

ActionPair pair_from_json(const Json& j,
                          const std::function<HopfAlgebra(const std::string&)>& resolve) {
    expect_schema(j, "pair.v1");
    if (!j.contains("hopf") || !j.contains("left"))
        throw schema_error("pair.v1: fields hopf and left are required");
    ActionPair p;
    HopfAlgebra h = resolve(j["hopf"].get<std::string>());
    const int n = h.dim;
    p.hopf = std::make_shared<HopfAlgebra>(std::move(h));
    p.name = "file";
    p.left = tensor3_from_json(j["left"], n, "left");
    if (j.contains("right"))
        p.right = tensor3_from_json(j["right"], n, "right");
    else
        p.right = derive_right_action(*p.hopf, p.left);
    return p;
}

Json rmatrix_to_json(const BraidingOperator& r) {
    Json j;
    j["schema"] = "rmatrix.v1";
    j["hopf"] = r.hopf->name;
    j["dim_sq"] = r.matrix.rows();
    j["matrix"] = scalar_matrix_to_json(r.matrix);
    return j;
}

Matrix rmatrix_from_json(const Json& j, std::string* hopf_name) {
    expect_schema(j, "rmatrix.v1");
    for (const char* key : {"hopf", "dim_sq", "matrix"})
        if (!j.contains(key)) throw schema_error(std::string("rmatrix.v1: missing field ") + key);
    int nn = j["dim_sq"].get<int>();
    if (hopf_name) *hopf_name = j["hopf"].get<std::string>();
    return scalar_matrix_from_json(j["matrix"], nn, nn, "matrix");
}

Json cqt_form_to_json(const CqtForm& f) {
    Json j;
    j["schema"] = "cqt.v1";
    j["hopf"] = f.hopf->name;
    j["form"] = scalar_matrix_to_json(f.form);
    return j;
}

CqtForm cqt_form_from_json(const Json& j,
                           const std::function<HopfAlgebra(const std::string&)>& resolve) {
    expect_schema(j, "cqt.v1");
    if (!j.contains("hopf") || !j.contains("form"))
        throw schema_error("cqt.v1: fields hopf and form are required");
    HopfAlgebra h = resolve(j["hopf"].get<std::string>());
    Matrix form = scalar_matrix_from_json(j["form"], h.dim, h.dim, "form");
    return make_cqt_form(h, form, "file");
}

Json transmutation_to_json(const TransmutationData& t) {
    const int n = t.hopf->dim;
    Json j;
    j["schema"] = "transmute.v1";
    j["hopf"] = t.hopf->name;
    j["bullet"] = tensor3_to_json(t.bullet);
    j["s_round"] = scalar_matrix_to_json(t.s_round);
    // row i = Ad_L(e_i) flattened, mirroring the comult layout
    Json adl = Json::array();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int pq = 0; pq < n * n; ++pq) row.push_back(t.ad_l_coaction.at(pq, i).str());
        adl.push_back(std::move(row));
    }
    j["ad_l_coaction"] = std::move(adl);
    j["prebraiding"] = scalar_matrix_to_json(t.prebraiding);
    return j;
}

Json report_to_json(const AxiomReport& r) {
    Json j;
    j["subject"] = r.subject;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        if (c.witness) {
            Json w;
            w["index"] = c.witness->index;
            w["lhs"] = c.witness->lhs;
            w["rhs"] = c.witness->rhs;
            cj["witness"] = std::move(w);
        }
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["elapsed_ms"] = r.elapsed_ms;
    j["passed"] = r.all_passed();
    return j;
}

}  // namespace hopfyb
