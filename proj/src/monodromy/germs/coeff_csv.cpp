#include "monodromy/germs/coeff_csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "monodromy/error.hpp"

namespace monodromy::germs {

void save_coeffs_csv(const std::string& path, const CoeffSeries& s) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp);
        out << "n,re,im\n";
        char buf[96];
        for (std::size_t n = 0; n < s.size(); ++n) {
            std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", n, s.a[n].real(), s.a[n].imag());
            out << buf;
        }
        if (!out) throw Error(ErrorCode::Io, "write failed for " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot rename " + tmp + ": " + ec.message());
}

CoeffSeries load_coeffs_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
    std::string line;
    if (!std::getline(in, line) || line != "n,re,im")
        throw Error(ErrorCode::Parse, "missing n,re,im header in " + path);
    CoeffSeries s;
    std::size_t expect = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string f0, f1, f2;
        if (!std::getline(row, f0, ',') || !std::getline(row, f1, ',') || !std::getline(row, f2))
            throw Error(ErrorCode::Parse, "malformed row in " + path + ": " + line);
        try {
            std::size_t n = std::stoull(f0);
            if (n != expect) throw Error(ErrorCode::Parse, "non-consecutive index in " + path);
            s.a.emplace_back(std::stod(f1), std::stod(f2));
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::Parse, "unparseable row in " + path + ": " + line);
        }
        ++expect;
    }
    return s;
}

}  // namespace monodromy::germs
