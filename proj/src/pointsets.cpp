#include "p3t/pointsets.hpp"

#include <filesystem>
#include <random>
#include <set>

#include <json.hpp>

namespace p3t {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PointSet sample(const SamplerConfig& config) {
  const int n = config.n;
  const std::int64_t m = config.extent;
  if (n < 3) throw PointSetError("sampler needs n >= 3");
  if (m < 8 || m > kCoordLimit) throw PointSetError("extent must lie in [8, 2^30]");

  std::vector<Point> pts;
  if (config.mode == HullMode::triangular) {
    const std::int64_t lattice = (m - 1) * (m - 2) / 2;  // strictly interior lattice points
    if (lattice < n - 3) throw PointSetError("extent too small to host the requested points");
    pts = {{0, 0}, {m, 0}, {0, m}};
  }

  std::mt19937_64 rng(derive_seed(config.seed, 0));
  std::uniform_int_distribution<std::int64_t> coord(config.mode == HullMode::triangular ? 1 : 0,
                                                    config.mode == HullMode::triangular ? m - 1 : m);
  std::set<Point> used(pts.begin(), pts.end());
  const long max_attempts = 2000L * n + 10000;
  long attempts = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (++attempts > max_attempts) {
      throw PointSetError("extent too small to host the requested points in general position");
    }
    const Point p{coord(rng), coord(rng)};
    if (config.mode == HullMode::triangular && p.x + p.y >= m) continue;
    if (used.contains(p)) continue;
    bool collinear = false;
    for (std::size_t i = 0; i < pts.size() && !collinear; ++i)
      for (std::size_t j = i + 1; j < pts.size() && !collinear; ++j)
        collinear = orient(pts[i], pts[j], p) == Sign::zero;
    if (collinear) continue;
    pts.push_back(p);
    used.insert(p);
  }
  return PointSet::require_general_position(std::move(pts));
}

OrderTypeReader::OrderTypeReader(const std::string& path, int n, int width, Endian endian)
    : n_(n), width_(width), endian_(endian) {
  if (width != 8 && width != 16) throw PointSetError("width must be 8 or 16");
  if (n < 1) throw PointSetError("n must be positive");
  std::error_code ec;
  const auto bytes = std::filesystem::file_size(path, ec);
  if (ec) throw PointSetError("cannot read " + path);
  if (bytes == 0) throw PointSetError("empty file");
  const std::size_t record_bytes = static_cast<std::size_t>(n) * 2 * (width / 8);
  if (bytes % record_bytes != 0) throw PointSetError("size mismatch");
  records_ = bytes / record_bytes;
  in_.open(path, std::ios::binary);
  if (!in_) throw PointSetError("cannot open " + path);
}

std::optional<OrderTypeRecord> OrderTypeReader::next() {
  if (read_ == records_) return std::nullopt;
  const int bytes_per = width_ / 8;
  std::vector<unsigned char> buf(static_cast<std::size_t>(n_) * 2 * bytes_per);
  in_.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!in_) throw PointSetError("size mismatch");

  auto value = [&](std::size_t offset) -> std::int64_t {
    if (bytes_per == 1) return buf[offset];
    const unsigned lo = endian_ == Endian::little ? buf[offset] : buf[offset + 1];
    const unsigned hi = endian_ == Endian::little ? buf[offset + 1] : buf[offset];
    return static_cast<std::int64_t>(lo | (hi << 8));
  };
  OrderTypeRecord rec;
  rec.index = read_++;
  for (int i = 0; i < n_; ++i) {
    const std::size_t off = static_cast<std::size_t>(i) * 2 * bytes_per;
    rec.points.push_back({value(off), value(off + bytes_per)});
  }
  const std::set<Point> distinct(rec.points.begin(), rec.points.end());
  rec.general_position = distinct.size() == rec.points.size() && general_position(rec.points);
  return rec;
}

std::vector<OrderTypeRecord> load_order_types(const std::string& path, int n, int width,
                                              Endian endian) {
  OrderTypeReader reader(path, n, width, endian);
  std::vector<OrderTypeRecord> out;
  out.reserve(reader.record_count());
  while (auto rec = reader.next()) out.push_back(std::move(*rec));
  return out;
}

std::string points_to_json(const std::vector<Point>& points) {
  nlohmann::json j;
  j["points"] = nlohmann::json::array();
  for (const Point& p : points) j["points"].push_back({p.x, p.y});
  return j.dump();
}

std::vector<Point> points_from_json(const std::string& text) {
  std::vector<Point> out;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& row : j.at("points")) {
      if (!row.is_array() || row.size() != 2) throw PointSetError("each point must be [x, y]");
      out.push_back({row[0].get<std::int64_t>(), row[1].get<std::int64_t>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw PointSetError(std::string("bad point-set JSON: ") + e.what());
  }
  return out;
}

}  // namespace p3t
