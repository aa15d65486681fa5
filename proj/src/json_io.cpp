#include "orbitkit/json_io.hpp"

#include "orbitkit/errors.hpp"

namespace orbitkit {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(BigInt(j.dump(), 10));
    }
    throw ParseError("expected a rational string, got " + j.dump());
}

Json vector_to_json(const RatVector& v)
{
    Json out = Json::array();
    for (const auto& e : v) {
        out.push_back(rational_to_json(e));
    }
    return out;
}

RatVector vector_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw ParseError("expected an array of rationals");
    }
    RatVector v;
    for (const auto& e : j) {
        v.push_back(rational_from_json(e));
    }
    return v;
}

Json matrix_to_json(const RatMatrix& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out.push_back(vector_to_json(m.row(r)));
    }
    return out;
}

RatMatrix matrix_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw ParseError("expected a matrix (array of rows)");
    }
    std::vector<RatVector> rows;
    for (const auto& r : j) {
        rows.push_back(vector_from_json(r));
    }
    try {
        return RatMatrix::from_rows(rows);
    } catch (const DimensionError& e) {
        throw ParseError(std::string("malformed matrix: ") + e.what());
    }
}

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::size_t size_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

}  // namespace

Json point_to_json(const PointX1& p)
{
    return Json{{"n", p.n()},
                {"x1", rational_to_json(p.x1())},
                {"xp", vector_to_json(p.x_prime())},
                {"y1", rational_to_json(p.y1())},
                {"yp", vector_to_json(p.y_prime())}};
}

PointX1 point_from_json(const Json& j)
{
    return PointX1::make(size_field(j, "n"), rational_from_json(field(j, "x1")), vector_from_json(field(j, "xp")),
                         rational_from_json(field(j, "y1")), vector_from_json(field(j, "yp")));
}

PointX1 parse_point(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed point JSON: ") + e.what());
    }
    return point_from_json(j);
}

Json element_to_json(const GroupElement& g)
{
    const auto factors = factor_tags(g.tag());
    auto simple = [](GroupTag tag, const RatMatrix& m) {
        Json j{{"tag", kind_name(tag.kind)}, {"n", tag.n}};
        if (tag.kind == GroupKind::ScalingTorus) {
            j["t"] = rational_to_json(m(0, 0));
        } else {
            j["matrix"] = matrix_to_json(m);
        }
        return j;
    };
    if (factors.size() == 1) {
        return simple(g.tag(), g.matrix());
    }
    Json components = Json::array();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        components.push_back(simple(factors[i], g.components()[i]));
    }
    return Json{{"tag", kind_name(g.tag().kind)}, {"n", g.tag().n}, {"components", components}};
}

GroupElement element_from_json(const Json& j)
{
    const GroupTag tag{parse_kind_name(field(j, "tag").get<std::string>()), size_field(j, "n")};
    auto simple_matrix = [](const Json& c) {
        if (c.contains("t")) {
            RatMatrix m(1, 1);
            m(0, 0) = rational_from_json(c.at("t"));
            return m;
        }
        return matrix_from_json(field(c, "matrix"));
    };
    std::vector<RatMatrix> components;
    if (is_product(tag.kind)) {
        for (const auto& c : field(j, "components")) {
            components.push_back(simple_matrix(c));
        }
    } else {
        components.push_back(simple_matrix(j));
    }
    return GroupElement::make(tag, std::move(components));
}

Json fiber_to_json(const FiberSpec& f)
{
    if (const auto* q = std::get_if<QFiber>(&f)) {
        return Json{{"q", Json::array({rational_to_json(q->x1), rational_to_json(q->y1)})}};
    }
    return Json{{"Q", rational_to_json(std::get<BigQFiber>(f).t)}};
}

FiberSpec parse_fiber(const std::string& text)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
        throw ParseError("fiber must be 'q=X1,Y1' or 'Q=T', got '" + text + "'");
    }
    const std::string key = text.substr(0, eq);
    const std::string value = text.substr(eq + 1);
    if (key == "Q") {
        return BigQFiber{parse_rational(value)};
    }
    if (key == "q") {
        const auto comma = value.find(',');
        if (comma == std::string::npos) {
            throw ParseError("q-fiber needs two values 'q=X1,Y1'");
        }
        return QFiber{parse_rational(value.substr(0, comma)), parse_rational(value.substr(comma + 1))};
    }
    throw ParseError("fiber key must be 'q' or 'Q', got '" + key + "'");
}

namespace {

void put_label_fields(Json& j, const OrbitLabel& l)
{
    if (const auto* q = std::get_if<QInvariants>(&l.continuous)) {
        j["q"] = Json::array({rational_to_json(q->x1), rational_to_json(q->y1)});
    } else {
        const auto& s = std::get<SignedQInvariants>(l.continuous);
        j["Q"] = rational_to_json(s.Q);
        j["sgn_x1"] = sign_name(s.sgn_x1);
        j["sgn_y1"] = sign_name(s.sgn_y1);
    }
    j["stratum"] = stratum_name(l.stratum.kind);
    if (l.stratum.kind == StratumKind::ConeSigned) {
        j["sign"] = sign_name(l.stratum.sign);
    }
}

}  // namespace

Json label_to_json(const OrbitLabel& l)
{
    Json j{{"case", case_name(l.group_case)}};
    put_label_fields(j, l);
    if (l.stratum.kind == StratumKind::ConeParam) {
        j["param"] = rational_to_json(l.stratum.param);
    }
    return j;
}

OrbitLabel label_from_json(const Json& j, std::size_t n)
{
    OrbitLabel l;
    l.group_case = parse_case_name(field(j, "case").get<std::string>());
    l.n = n;
    if (uses_big_Q(l.group_case)) {
        l.continuous = SignedQInvariants{rational_from_json(field(j, "Q")),
                                         parse_sign(field(j, "sgn_x1").get<std::string>()),
                                         parse_sign(field(j, "sgn_y1").get<std::string>())};
    } else {
        const Json& q = field(j, "q");
        if (!q.is_array() || q.size() != 2) {
            throw ParseError("label field 'q' must be a pair");
        }
        l.continuous = QInvariants{rational_from_json(q[0]), rational_from_json(q[1])};
    }
    l.stratum.kind = parse_stratum_name(field(j, "stratum").get<std::string>());
    if (l.stratum.kind == StratumKind::ConeSigned) {
        l.stratum.sign = parse_sign(field(j, "sign").get<std::string>());
    }
    if (l.stratum.kind == StratumKind::ConeParam) {
        l.stratum.param = rational_from_json(field(j, "param"));
    }
    return l;
}

Json census_to_json(const CensusReport& r)
{
    Json labels = Json::array();
    for (const auto& e : r.labels) {
        Json entry = Json::object();
        put_label_fields(entry, e.label);
        entry["count"] = e.count;
        labels.push_back(entry);
    }
    Json j{{"case", case_name(r.group_case)},
           {"n", r.n},
           {"fiber", fiber_to_json(r.fiber)},
           {"samples", r.samples},
           {"labels", labels},
           {"distinct", r.distinct},
           {"continuum", r.continuum}};
    if (r.continuum) {
        j["cone_params"] = vector_to_json(r.cone_params);
    }
    return j;
}

Json span_report_to_json(const SpanReport& r)
{
    return Json{{"point", vector_to_json(r.point)},
                {"rank_gl", r.rank_gl},
                {"rank_so", r.rank_so},
                {"rank_union", r.rank_union},
                {"spans_equal", r.spans_equal}};
}

Json rank_table_to_json(const RankTable& t)
{
    Json strata = Json::array();
    for (const auto& s : t.strata) {
        strata.push_back(Json{{"name", s.name},
                              {"rank_gl", s.rank_gl},
                              {"rank_so", s.rank_so},
                              {"rank_union", s.rank_union},
                              {"equal", s.equal},
                              {"samples", s.samples},
                              {"constant", s.constant}});
    }
    return Json{{"n", t.n}, {"strata", strata}};
}

Json identity_report_to_json(const IdentityReport& r)
{
    Json j{{"identity", r.identity}, {"trials", r.trials}, {"failures", r.failures}};
    if (r.first_failure) {
        j["first_failure"] = Json::parse(*r.first_failure);
    }
    return j;
}

Json delta_to_json(const DeltaDistribution& d)
{
    Json terms = Json::array();
    for (const auto& [alpha, c] : d.terms()) {
        terms.push_back(Json{{"alpha", alpha}, {"c", rational_to_json(c)}});
    }
    return Json{{"n", d.n()}, {"terms", terms}};
}

DeltaDistribution delta_from_json(const Json& j)
{
    DeltaDistribution d(size_field(j, "n"));
    for (const auto& t : field(j, "terms")) {
        d.add_term(field(t, "alpha").get<MultiIndex>(), rational_from_json(field(t, "c")));
    }
    return d;
}

}  // namespace orbitkit
