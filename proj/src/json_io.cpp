#include "k3twist/json_io.hpp"

#include <limits>

namespace k3twist::json_io {

namespace {

const Int kSafeLimit = Int("9007199254740992"); // 2^53

Int parse_int_string(const std::string& s) {
    Int x;
    if (s.empty() || x.set_str(s, 10) != 0)
        throw ValidationError("not an integer: \"" + s + "\"");
    return x;
}

const json& require_array(const json& j, const char* what) {
    if (!j.is_array())
        throw ValidationError(std::string(what) + " must be a JSON array");
    return j;
}

template <typename T, typename F>
Matrix<T> decode_rows(const json& j, F&& decode_entry) {
    const json* data = &j;
    std::optional<std::size_t> rows, cols;
    if (j.is_object()) {
        data = &field(j, "data");
        rows = field(j, "rows").get<std::size_t>();
        cols = field(j, "cols").get<std::size_t>();
    }
    require_array(*data, "matrix data");
    std::vector<std::vector<T>> out;
    for (const auto& r : *data) {
        require_array(r, "matrix row");
        std::vector<T> row;
        for (const auto& x : r)
            row.push_back(decode_entry(x));
        out.push_back(std::move(row));
    }
    Matrix<T> m = Matrix<T>::from_rows(out, cols.value_or(0));
    if (rows && (m.rows() != *rows || m.cols() != *cols))
        throw ValidationError("matrix rows/cols do not match its data");
    return m;
}

} // namespace

const json& field(const json& obj, const char* key) {
    if (!obj.is_object())
        throw ValidationError(std::string("expected an object with key \"") + key + "\"");
    auto it = obj.find(key);
    if (it == obj.end())
        throw ValidationError(std::string("missing key \"") + key + "\"");
    return *it;
}

json encode(const Int& x) {
    if (abs(x) < kSafeLimit)
        return json(x.get_si());
    return json(x.get_str());
}

json encode(const Rat& x) {
    return json(x.get_str());
}

json encode(const IntVec& v) {
    json out = json::array();
    for (const auto& x : v)
        out.push_back(encode(x));
    return out;
}

json encode(const RatVec& v) {
    json out = json::array();
    for (const auto& x : v)
        out.push_back(encode(x));
    return out;
}

json encode_rows(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(encode(m.row_vector(i)));
    return out;
}

json encode_rows(const RatMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (const auto& x : m.row(i))
            row.push_back(x.get_den() == 1 ? encode(Int(x.get_num())) : encode(x));
        out.push_back(std::move(row));
    }
    return out;
}

json encode_matrix(const IntMatrix& m) {
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", encode_rows(m)}};
}

json encode(const Lattice& l) {
    json out = {{"gram", encode_rows(l.gram())}};
    if (!l.name().empty())
        out["name"] = l.name();
    return out;
}

json encode(const Sublattice& s) {
    return {{"ambient", encode(s.ambient)}, {"basis", encode_rows(s.basis)}};
}

json encode(const MukaiVector& v) {
    return {{"r", encode(v.r)}, {"c", encode(v.c)}, {"s", encode(v.s)}};
}

json encode(const BField& b) {
    return {{"xi", encode(b.xi)}, {"r", encode(b.r)}};
}

json encode(const BrauerWitness& w) {
    return {{"L", encode(w.l)}, {"N", encode(w.n)}};
}

json encode(const Wall& w) {
    return {{"xi", encode(w.xi)}, {"norm", encode(w.norm)}, {"on_endpoint", w.on_endpoint}};
}

json encode(const Isometry& iso) {
    return {{"matrix", encode_rows(iso.matrix())}, {"source", encode(iso.source())}, {"target", encode(iso.target())}};
}

json encode(const ModuliReport& r) {
    return {{"v2", encode(r.pairing_square)},
            {"dim", encode(r.dim)},
            {"nonempty", r.nonempty},
            {"is_k3", r.is_k3},
            {"hilb_n", r.hilb_n ? encode(*r.hilb_n) : json(nullptr)}};
}

json encode(const Inertia& s) {
    return {{"pos", s.pos}, {"neg", s.neg}, {"zero", s.zero}};
}

Int decode_int(const json& j) {
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Int(j.get<unsigned long>()) : Int(j.get<long>());
    if (j.is_string())
        return parse_int_string(j.get<std::string>());
    throw ValidationError("expected an integer, got " + j.dump());
}

Rat decode_rat(const json& j) {
    if (j.is_number_integer())
        return Rat(decode_int(j));
    if (!j.is_string())
        throw ValidationError("expected a rational \"p/q\", got " + j.dump());
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(parse_int_string(s));
    const Int num = parse_int_string(s.substr(0, slash));
    const Int den = parse_int_string(s.substr(slash + 1));
    if (den == 0)
        throw ValidationError("zero denominator in \"" + s + "\"");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

IntVec decode_int_vec(const json& j) {
    IntVec out;
    for (const auto& x : require_array(j, "integer vector"))
        out.push_back(decode_int(x));
    return out;
}

RatVec decode_rat_vec(const json& j) {
    RatVec out;
    for (const auto& x : require_array(j, "rational vector"))
        out.push_back(decode_rat(x));
    return out;
}

IntMatrix decode_int_matrix(const json& j) {
    return decode_rows<Int>(j, [](const json& x) { return decode_int(x); });
}

RatMatrix decode_rat_matrix(const json& j) {
    return decode_rows<Rat>(j, [](const json& x) { return decode_rat(x); });
}

Lattice decode_lattice(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "K3")
            return k3_lattice();
        if (s == "Mukai")
            return mukai_lattice();
        if (s == "U")
            return hyperbolic_plane();
        if (s == "E8(-1)")
            return e8_minus();
        throw ValidationError("unknown lattice name \"" + s + "\"");
    }
    std::string name;
    if (j.is_object() && j.contains("name"))
        name = j["name"].get<std::string>();
    return Lattice(decode_int_matrix(field(j, "gram")), name);
}

Sublattice decode_sublattice(const json& j) {
    Lattice ambient = decode_lattice(field(j, "ambient"));
    IntMatrix basis = decode_int_matrix(field(j, "basis"));
    if (basis.rows() == 0)
        basis = IntMatrix(0, ambient.rank());
    return Sublattice(std::move(ambient), std::move(basis));
}

MukaiVector decode_mukai(const json& j) {
    return {decode_int(field(j, "r")), decode_rat_vec(field(j, "c")), decode_rat(field(j, "s"))};
}

HilbertCoeffs decode_hilbert(const json& j) {
    HilbertCoeffs h{field(j, "d").get<int>(), decode_rat_vec(field(j, "a"))};
    h.validate();
    return h;
}

BField decode_bfield(const json& j) {
    BField b{decode_int_vec(field(j, "xi")), decode_int(field(j, "r"))};
    if (b.r < 1)
        throw ValidationError("B-field denominator r must be positive");
    return b;
}

BrauerWitness decode_witness(const json& j) {
    return {decode_int_vec(field(j, "L")), decode_int_vec(field(j, "N"))};
}

WallQuery decode_wall_query(const json& j) {
    WallQuery q{decode_lattice(field(j, "ns")), decode_mukai(field(j, "v")), decode_int(field(j, "r0")),
                decode_int_vec(field(j, "H0")), {}};
    q.h1 = j.contains("H1") ? decode_int_vec(j["H1"]) : q.h0;
    return q;
}

Isometry decode_isometry(const json& j) {
    return Isometry(decode_rat_matrix(field(j, "matrix")), decode_lattice(field(j, "source")),
                    decode_lattice(field(j, "target")));
}

} // namespace k3twist::json_io
