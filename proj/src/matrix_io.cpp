#include "crcodes/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "crcodes/errors.hpp"

namespace crcodes {

namespace {

long long parse_kv(const std::string& token, const std::string& key) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0) throw InputError("matrix header: expected " + prefix + "..., got " + token);
    try {
        return std::stoll(token.substr(prefix.size()));
    } catch (const std::exception&) {
        throw InputError("matrix header: bad integer in " + token);
    }
}

} // namespace

void write_matrix(std::ostream& os, const Matrix& m, const std::vector<std::string>& comments) {
    for (const auto& c : comments) os << "# " << c << "\n";
    const Field& f = m.field();
    os << "q=" << f.q() << " p=" << f.p() << " s=" << f.degree() << " modulus=" << f.modulus_code()
       << " rows=" << m.rows() << " cols=" << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << "\n";
    }
}

Matrix read_matrix(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '#') break;
    }
    if (line.empty() || line[0] == '#') throw InputError("matrix file: missing header line");

    std::istringstream hs(line);
    std::string tq, tp, ts, tmod, trows, tcols;
    if (!(hs >> tq >> tp >> ts >> tmod >> trows >> tcols))
        throw InputError("matrix file: malformed header line");
    const long long q = parse_kv(tq, "q");
    const long long p = parse_kv(tp, "p");
    const long long s = parse_kv(ts, "s");
    const long long modulus = parse_kv(tmod, "modulus");
    const long long rows = parse_kv(trows, "rows");
    const long long cols = parse_kv(tcols, "cols");

    FieldPtr f = field_new((int)p, (int)s);
    if (f->q() != q) throw InputError("matrix header: q does not equal p^s");
    if (f->modulus_code() != modulus)
        throw InputError("matrix header: modulus " + std::to_string(modulus) +
                         " does not match the canonical primitive polynomial (code " +
                         std::to_string(f->modulus_code()) + ")");
    if (rows < 0 || cols < 0 || rows > 4096 || cols > 1 << 20)
        throw InputError("matrix header: unreasonable dimensions");

    Matrix m(f, (int)rows, (int)cols);
    for (int i = 0; i < rows; ++i) {
        if (!std::getline(is, line)) throw InputError("matrix file: truncated rows");
        std::istringstream rs(line);
        for (int j = 0; j < cols; ++j) {
            long long v;
            if (!(rs >> v)) throw InputError("matrix file: truncated row " + std::to_string(i));
            if (v < 0 || v >= q) throw InputError("matrix file: entry out of range");
            m.set(i, j, (int)v);
        }
    }
    return m;
}

void write_matrix_file(const std::string& path, const Matrix& m, const std::vector<std::string>& comments) {
    std::ofstream os(path);
    if (!os) throw InputError("cannot open for writing: " + path);
    write_matrix(os, m, comments);
    if (!os) throw InputError("write failed: " + path);
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw InputError("cannot open: " + path);
    return read_matrix(is);
}

} // namespace crcodes
