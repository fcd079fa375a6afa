// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Shearkit Project Contributors

#ifndef SHEARKIT_GRID_HPP
#define SHEARKIT_GRID_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace shearkit {

using cplx = std::complex<double>;

/// Real-valued 2D raster, row-major.
struct ImageGrid {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    ImageGrid() = default;
    ImageGrid(int r, int c, double fill = 0.0)
        : rows(r), cols(c), data(check_size(r, c), fill) {}
    ImageGrid(int r, int c, std::vector<double> d)
        : rows(r), cols(c), data(std::move(d)) {
        if (data.size() != check_size(r, c))
            throw std::invalid_argument("ImageGrid: data length != rows*cols");
    }

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    std::size_t size() const { return data.size(); }

    static std::size_t check_size(int r, int c) {
        if (r < 1 || c < 1)
            throw std::invalid_argument("ImageGrid: rows and cols must be >= 1");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(c);
    }
};

/// Complex-valued 2D raster, row-major.
struct ComplexGrid {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> data;

    ComplexGrid() = default;
    ComplexGrid(int r, int c, cplx fill = cplx(0.0, 0.0))
        : rows(r), cols(c), data(ImageGrid::check_size(r, c), fill) {}
    ComplexGrid(int r, int c, std::vector<cplx> d)
        : rows(r), cols(c), data(std::move(d)) {
        if (data.size() != ImageGrid::check_size(r, c))
            throw std::invalid_argument("ComplexGrid: data length != rows*cols");
    }

    cplx& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    cplx at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    std::size_t size() const { return data.size(); }
};

inline ComplexGrid to_complex(const ImageGrid& g) {
    ComplexGrid out(g.rows, g.cols);
    for (std::size_t i = 0; i < g.data.size(); ++i) out.data[i] = cplx(g.data[i], 0.0);
    return out;
}

inline ImageGrid real_part(const ComplexGrid& g) {
    ImageGrid out(g.rows, g.cols);
    for (std::size_t i = 0; i < g.data.size(); ++i) out.data[i] = g.data[i].real();
    return out;
}

inline bool same_shape(const ImageGrid& a, const ImageGrid& b) {
    return a.rows == b.rows && a.cols == b.cols;
}

}  // namespace shearkit

#endif  // SHEARKIT_GRID_HPP
