#pragma once

#include <complex>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

inline std::string fixture_path(const std::string& name) {
    return std::string(RELAXWAVE_FIXTURE_DIR) + "/" + name;
}

struct MLReferenceRow {
    double a = 0.0;
    double b = 0.0;
    std::complex<double> z;
    std::complex<double> value;
};

inline std::vector<MLReferenceRow> read_ml_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    std::vector<MLReferenceRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        MLReferenceRow row;
        double zr, zi, er, ei;
        if (!(ss >> row.a >> row.b >> zr >> zi >> er >> ei))
            throw std::runtime_error("malformed fixture row in " + path + ": " + line);
        row.z = {zr, zi};
        row.value = {er, ei};
        rows.push_back(row);
    }
    if (rows.empty()) throw std::runtime_error("empty fixture " + path);
    return rows;
}

struct CurveReferenceRow {
    double omega = 0.0;
    double alpha_k = 0.0;
    double c_p = 0.0;
};

inline std::vector<CurveReferenceRow> read_curve_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    std::vector<CurveReferenceRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        CurveReferenceRow row;
        if (!(ss >> row.omega >> row.alpha_k >> row.c_p))
            throw std::runtime_error("malformed fixture row in " + path + ": " + line);
        rows.push_back(row);
    }
    if (rows.empty()) throw std::runtime_error("empty fixture " + path);
    return rows;
}
