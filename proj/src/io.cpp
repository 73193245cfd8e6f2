#include "zk/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace zk {

namespace {
constexpr char kMagic[8] = {'Z', 'K', 'F', 'L', 'D', '0', '0', '1'};
}

void write_field(const std::string& path, const RealField2D& f)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_field: cannot open " + path);
    const Grid2D& g = f.grid();
    std::uint32_t n1 = g.n1(), n2 = g.n2();
    double L1 = g.half_width1(), L2 = g.half_width2();
    os.write(kMagic, 8);
    os.write(reinterpret_cast<const char*>(&n1), 4);
    os.write(reinterpret_cast<const char*>(&n2), 4);
    os.write(reinterpret_cast<const char*>(&L1), 8);
    os.write(reinterpret_cast<const char*>(&L2), 8);
    os.write(reinterpret_cast<const char*>(f.data()), static_cast<std::streamsize>(f.size() * sizeof(double)));
    if (!os) throw std::runtime_error("write_field: short write to " + path);
}

RealField2D read_field(const std::string& path, Grid2D& grid_store)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_field: cannot open " + path);
    char magic[8];
    std::uint32_t n1 = 0, n2 = 0;
    double L1 = 0, L2 = 0;
    is.read(magic, 8);
    if (std::memcmp(magic, kMagic, 8) != 0) throw std::runtime_error("read_field: bad magic in " + path);
    is.read(reinterpret_cast<char*>(&n1), 4);
    is.read(reinterpret_cast<char*>(&n2), 4);
    is.read(reinterpret_cast<char*>(&L1), 8);
    is.read(reinterpret_cast<char*>(&L2), 8);
    grid_store = Grid2D(static_cast<int>(n1), static_cast<int>(n2), L1, L2);
    RealField2D f(grid_store);
    is.read(reinterpret_cast<char*>(f.data()), static_cast<std::streamsize>(f.size() * sizeof(double)));
    if (!is) throw std::runtime_error("read_field: short read from " + path);
    return f;
}

std::uint64_t file_checksum(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("file_checksum: cannot open " + path);
    std::uint64_t h = 1469598103934665603ull;
    char buf[65536];
    while (is) {
        is.read(buf, sizeof(buf));
        std::streamsize got = is.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
    }
    return h;
}

} // namespace zk
