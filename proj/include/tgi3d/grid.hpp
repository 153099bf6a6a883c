// Copyright 2026 The tgi3d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TGI3D_GRID_HPP
#define TGI3D_GRID_HPP

#include <cstddef>
#include <vector>

namespace tgi {

/// Dense row-major 2D array addressed as (x, y) with x the column.
template <typename T>
class grid {
  public:
    grid() = default;
    grid(std::size_t width, std::size_t height, T fill = T{})
        : width_(width), height_(height), data_(width * height, fill) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t x, std::size_t y) noexcept { return data_[y * width_ + x]; }
    const T& operator()(std::size_t x, std::size_t y) const noexcept {
        return data_[y * width_ + x];
    }

    T& operator[](std::size_t i) noexcept { return data_[i]; }
    const T& operator[](std::size_t i) const noexcept { return data_[i]; }

    T* data() noexcept { return data_.data(); }
    const T* data() const noexcept { return data_.data(); }

    auto begin() noexcept { return data_.begin(); }
    auto end() noexcept { return data_.end(); }
    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    bool same_shape(const grid& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

    friend bool operator==(const grid& a, const grid& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.data_ == b.data_;
    }

  private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<T> data_;
};

}  // namespace tgi

#endif
