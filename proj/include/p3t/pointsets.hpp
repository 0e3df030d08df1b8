#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "p3t/geom.hpp"

namespace p3t {

class PointSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class HullMode { triangular, unconstrained };

struct SamplerConfig {
  int n = 3;
  std::int64_t extent = 1000;  // M
  std::uint64_t seed = 0;
  HullMode mode = HullMode::triangular;
};

/// splitmix64 of (seed, index); per-trial streams independent of trial order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// General-position sample, deterministic in the config. In triangular mode
/// the corners (0,0), (M,0), (0,M) come first and every other point is
/// strictly inside. Throws PointSetError for invalid configs or when the
/// extent cannot host n points.
PointSet sample(const SamplerConfig& config);

enum class Endian { little, big };

struct OrderTypeRecord {
  std::size_t index = 0;
  std::vector<Point> points;
  bool general_position = true;
};

/// Sequential reader for binary order-type files: records of n points, each
/// point x then y as unsigned integers of `width` bits.
class OrderTypeReader {
 public:
  OrderTypeReader(const std::string& path, int n, int width, Endian endian = Endian::little);

  std::size_t record_count() const { return records_; }
  std::optional<OrderTypeRecord> next();

 private:
  std::ifstream in_;
  int n_;
  int width_;
  Endian endian_;
  std::size_t records_ = 0;
  std::size_t read_ = 0;
};

std::vector<OrderTypeRecord> load_order_types(const std::string& path, int n, int width,
                                              Endian endian = Endian::little);

/// {"points": [[x, y], ...]}
std::string points_to_json(const std::vector<Point>& points);
std::vector<Point> points_from_json(const std::string& text);

}  // namespace p3t
