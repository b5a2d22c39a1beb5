#include "ecoh/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ecoh/errors.hpp"

namespace ecoh::io {
namespace {

using nlohmann::json;

json parse_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON in " + path);
    if (!doc.is_object()) throw ParseError("expected a JSON object in " + path);
    return doc;
}

std::vector<cplx> parse_complex_array(const json& node, const std::string& what) {
    if (!node.is_array()) throw ParseError(what + " must be an array of [re, im] pairs");
    std::vector<cplx> out;
    out.reserve(node.size());
    for (const json& pair : node) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ParseError(what + " entries must be [re, im] number pairs");
        out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return out;
}

json dump_complex_array(std::span<const cplx> values) {
    json out = json::array();
    for (const cplx& v : values) out.push_back(json::array({v.real(), v.imag()}));
    return out;
}

}  // namespace

states::PureBipartiteState read_state_file(const std::string& path) {
    const json doc = parse_document(path);
    if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].size() != 2 ||
        !doc["dims"][0].is_number_unsigned() || !doc["dims"][1].is_number_unsigned())
        throw ParseError("state file needs a dims field with two positive integers");
    if (!doc.contains("amplitudes"))
        throw ParseError("state file needs an amplitudes field");

    const auto dim_a = doc["dims"][0].get<std::size_t>();
    const auto dim_b = doc["dims"][1].get<std::size_t>();
    const std::vector<cplx> amps = parse_complex_array(doc["amplitudes"], "amplitudes");
    return states::new_state(dim_a, dim_b, amps);
}

ComplexMatrix read_density_file(const std::string& path) {
    const json doc = parse_document(path);
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
        throw ParseError("density file needs a dim field with a positive integer");
    if (!doc.contains("matrix"))
        throw ParseError("density file needs a matrix field");

    const auto dim = doc["dim"].get<std::size_t>();
    if (dim == 0) throw ParseError("density dimension must be positive");
    std::vector<cplx> entries = parse_complex_array(doc["matrix"], "matrix");
    if (entries.size() != dim * dim)
        throw Error(ErrorCode::BadShape, "matrix entry count does not equal dim^2");
    return ComplexMatrix(dim, dim, std::move(entries));
}

void write_state_file(const std::string& path, const states::PureBipartiteState& psi) {
    json doc;
    doc["dims"] = json::array({psi.dim_a(), psi.dim_b()});
    doc["amplitudes"] = dump_complex_array(psi.coeffs().entries());
    write_text_file(path, doc.dump(2) + "\n");
}

void write_density_file(const std::string& path, const ComplexMatrix& matrix) {
    json doc;
    doc["dim"] = matrix.rows();
    doc["matrix"] = dump_complex_array(matrix.entries());
    write_text_file(path, doc.dump(2) + "\n");
}

std::string format_fixed(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
    std::string out = buffer;
    // Normalize "-0.000000000" to its unsigned form.
    if (out.size() > 1 && out[0] == '-' &&
        out.find_first_not_of("0.", 1) == std::string::npos)
        out.erase(0, 1);
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "param,ec,iconc_norm,entropy_norm\n";
    for (const SweepRow& row : rows) {
        out += format_fixed(row.param) + ',' + format_fixed(row.ec) + ',' +
               format_fixed(row.iconc_norm) + ',' + format_fixed(row.entropy_norm) + '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << contents;
    out.flush();
    if (!out) throw ParseError("failed while writing file: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace ecoh::io
