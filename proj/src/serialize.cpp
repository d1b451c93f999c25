#include "indep/serialize.hpp"

namespace indep {

Json field_to_json(const FieldDescriptor& fd) {
    switch (fd.kind) {
    case FieldKind::ExactRational: return Json("rational");
    case FieldKind::PrimeField: return Json("gf(" + std::to_string(fd.modulus) + ")");
    case FieldKind::ApproxReal: return Json{{"approx", fd.tolerance}};
    }
    throw Error("unreachable field kind");
}

FieldDescriptor field_from_json(const Json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "rational") return FieldDescriptor::rational();
        if (s.size() > 4 && s.rfind("gf(", 0) == 0 && s.back() == ')') {
            const std::string num = s.substr(3, s.size() - 4);
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                throw Error("invalid field '" + s + "': modulus must be a positive integer");
            unsigned long long p = 0;
            try {
                p = std::stoull(num);
            } catch (const std::exception&) {
                throw Error("invalid field '" + s + "': modulus out of range");
            }
            return FieldDescriptor::gf(p);
        }
        throw Error("unknown field '" + s + "' (expected \"rational\", \"gf(p)\", or {\"approx\": tol})");
    }
    if (j.is_object() && j.contains("approx")) {
        if (!j["approx"].is_number()) throw Error("field approx tolerance must be a number");
        return FieldDescriptor::approx(j["approx"].get<double>());
    }
    throw Error("field must be \"rational\", \"gf(p)\", or {\"approx\": tol}");
}

Json scalar_to_json(const Scalar& v, const FieldDescriptor& fd) {
    if (fd.kind == FieldKind::ApproxReal) return Json(v.dbl());
    return Json(scalar_to_string(v, fd));
}

Scalar scalar_from_json(const Json& j, const FieldDescriptor& fd) {
    if (j.is_string()) return scalar_from_string(j.get<std::string>(), fd);
    if (j.is_number_integer()) return from_integer(j.get<std::int64_t>(), fd);
    if (j.is_number_float()) {
        if (fd.kind != FieldKind::ApproxReal)
            throw Error("non-integer numeric literal is only valid over the approximate field");
        return Scalar::real(j.get<double>());
    }
    throw Error("scalar must be a string or number, got " + std::string(j.type_name()));
}

Json point_to_json(const Point& p, const FieldDescriptor& fd) {
    Json coords = Json::array();
    for (const Scalar& c : p.coords) coords.push_back(scalar_to_json(c, fd));
    return Json{{"label", p.label}, {"coords", coords}};
}

Point point_from_json(const Json& j, const FieldDescriptor& fd) {
    if (!j.is_object() || !j.contains("coords"))
        throw Error("point must be an object with 'coords'");
    std::vector<Scalar> coords;
    for (const Json& c : j["coords"]) coords.push_back(scalar_from_json(c, fd));
    std::string label = j.value("label", std::string());
    return make_point(std::move(coords), std::move(label));
}

Json matrix_to_json(const Matrix& m, const FieldDescriptor& fd) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) arr.push_back(scalar_to_json(m(i, j), fd));
    return arr;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                        const FieldDescriptor& fd) {
    if (!j.is_array() || j.size() != rows * cols)
        throw DimensionMismatch("matrix array must hold " + std::to_string(rows * cols) +
                                " entries");
    Matrix m(rows, cols, zero(fd));
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(j[k++], fd);
    return m;
}

Json certificate_to_json(const IndependenceCertificate& cert) {
    Json points = Json::array();
    for (const Point& p : cert.points) points.push_back(point_to_json(p, cert.field));
    return Json{{"field", field_to_json(cert.field)},
                {"n", cert.points.size()},
                {"points", points},
                {"A", matrix_to_json(cert.a, cert.field)},
                {"U", matrix_to_json(cert.u, cert.field)}};
}

IndependenceCertificate certificate_from_json(const Json& j) {
    IndependenceCertificate cert;
    cert.field = field_from_json(j.at("field"));
    const std::size_t n = j.at("n").get<std::size_t>();
    for (const Json& p : j.at("points")) cert.points.push_back(point_from_json(p, cert.field));
    if (cert.points.size() != n) throw DimensionMismatch("certificate point count vs n");
    cert.a = matrix_from_json(j.at("A"), n, n, cert.field);
    cert.u = matrix_from_json(j.at("U"), n, n, cert.field);
    return cert;
}

Json witness_to_json(const DependenceWitness& w) {
    Json beta = Json::array();
    for (const Scalar& b : w.beta) beta.push_back(scalar_to_json(b, w.field));
    return Json{{"field", field_to_json(w.field)},
                {"beta", beta},
                {"scope", "dependence holds for the functions restricted to the candidate pool"}};
}

DependenceWitness witness_from_json(const Json& j) {
    DependenceWitness w;
    w.field = field_from_json(j.at("field"));
    for (const Json& b : j.at("beta")) w.beta.push_back(scalar_from_json(b, w.field));
    return w;
}

Json rank_result_to_json(const RankResult& r, const std::vector<std::string>& names,
                         const FieldDescriptor& fd) {
    Json basis = Json::array();
    Json basis_names = Json::array();
    for (std::size_t i : r.basis_indices) {
        basis.push_back(i + 1); // reports use 1-based function indices
        if (i < names.size()) basis_names.push_back(names[i]);
    }
    Json out{{"rank", r.rank}, {"basis_indices", basis}, {"basis_functions", basis_names}};
    if (r.certificate) out["certificate"] = certificate_to_json(*r.certificate);
    (void)fd;
    return out;
}

} // namespace indep
