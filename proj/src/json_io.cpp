#include "ria/json_io.hpp"

#include <fstream>

namespace ria {

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const Scalar& s = m.at(i, j);
            if (s.backend() == Backend::exact) {
                entries.push_back({format_rational(s.rat().re()), format_rational(s.rat().im())});
            } else {
                entries.push_back({format_double(s.cplx().real()), format_double(s.cplx().imag())});
            }
        }
    }
    return json{{"rows", m.rows()},
                {"cols", m.cols()},
                {"backend", to_string(m.backend())},
                {"entries", entries}};
}

Matrix matrix_from_json(const json& j) {
    try {
        int rows = j.at("rows").get<int>();
        int cols = j.at("cols").get<int>();
        Backend be = backend_from_string(j.at("backend").get<std::string>());
        const json& entries = j.at("entries");
        if (!entries.is_array() ||
            entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
            throw ParseError("entries length must equal rows*cols");
        Matrix m(rows, cols, be);
        std::size_t k = 0;
        for (int i = 0; i < rows; ++i) {
            for (int jj = 0; jj < cols; ++jj, ++k) {
                const json& e = entries[k];
                if (!e.is_array() || e.size() != 2)
                    throw ParseError("each entry must be a [re, im] pair of strings");
                const std::string re = e[0].get<std::string>();
                const std::string im = e[1].get<std::string>();
                if (be == Backend::exact) {
                    m.set(i, jj,
                          Scalar::exact(GaussianRational(GaussianRational::parse_rational(re),
                                                         GaussianRational::parse_rational(im))));
                } else {
                    m.set(i, jj, Scalar::floating({parse_double(re), parse_double(im)}));
                }
            }
        }
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed matrix JSON: ") + e.what());
    }
}

std::string matrix_to_string(const Matrix& m) { return matrix_to_json(m).dump(); }

Matrix matrix_from_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return matrix_from_json(j);
}

Matrix matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return matrix_from_string(text);
}

void matrix_to_file(const Matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << matrix_to_json(m).dump(2) << "\n";
}

} // namespace ria
