#include "facekit/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <string>

namespace facekit {

namespace {

// Incremental PGM header reader that tracks the byte offset for error
// reporting. Comments (# to end of line) may appear wherever whitespace may.
class PgmCursor {
public:
    explicit PgmCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t offset() const { return pos_; }
    bool done() const { return pos_ >= bytes_.size(); }

    void skip_space_and_comments() {
        while (!done()) {
            const char c = static_cast<char>(bytes_[pos_]);
            if (c == '#') {
                while (!done() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    int read_int(const char* what) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        while (!done() && std::isdigit(bytes_[pos_])) ++pos_;
        if (pos_ == start) {
            throw FormatError(std::string("pgm: expected ") + what + " at byte offset " +
                              std::to_string(start));
        }
        int value = 0;
        const char* first = reinterpret_cast<const char*>(bytes_.data() + start);
        const char* last = reinterpret_cast<const char*>(bytes_.data() + pos_);
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            throw FormatError(std::string("pgm: unreadable ") + what + " at byte offset " +
                              std::to_string(start));
        }
        return value;
    }

    // The Netpbm convention: exactly one whitespace byte separates the
    // maxval from a binary payload.
    void expect_single_whitespace() {
        if (done() || !std::isspace(bytes_[pos_])) {
            throw FormatError("pgm: expected whitespace after maxval at byte offset " +
                              std::to_string(pos_));
        }
        ++pos_;
    }

    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

std::uint8_t rescale(long value, long maxval) {
    if (maxval == 255) return static_cast<std::uint8_t>(value);
    // round half up on value * 255 / maxval
    return static_cast<std::uint8_t>((value * 510 + maxval) / (2 * maxval));
}

}  // namespace

FaceImage load_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
        throw FormatError("pgm: bad magic at byte offset 0 (want P5 or P2)");
    }
    const bool binary = bytes[1] == '5';

    PgmCursor cur(bytes.subspan(2));
    const int width = cur.read_int("width");
    const int height = cur.read_int("height");
    const int maxval = cur.read_int("maxval");
    if (width <= 0 || height <= 0) {
        throw FormatError("pgm: non-positive dimensions at byte offset 2");
    }
    if (maxval < 1 || maxval > 65535) {
        throw FormatError("pgm: maxval out of range at byte offset 2");
    }

    const std::size_t count = static_cast<std::size_t>(width) * height;
    FaceImage image;
    image.width = width;
    image.height = height;
    image.pixels.reserve(count);

    if (binary) {
        cur.expect_single_whitespace();
        const auto payload = cur.rest();
        const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
        if (payload.size() < count * bytes_per_sample) {
            throw FormatError("pgm: truncated payload, expected " +
                              std::to_string(count * bytes_per_sample) + " bytes, got " +
                              std::to_string(payload.size()));
        }
        for (std::size_t i = 0; i < count; ++i) {
            long v = bytes_per_sample == 2
                         ? (static_cast<long>(payload[2 * i]) << 8) | payload[2 * i + 1]
                         : payload[i];
            image.pixels.push_back(rescale(v, maxval));
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            cur.skip_space_and_comments();
            if (cur.done()) {
                throw FormatError("pgm: truncated payload, expected " + std::to_string(count) +
                                  " samples, got " + std::to_string(i));
            }
            image.pixels.push_back(rescale(cur.read_int("sample"), maxval));
        }
    }
    return image;
}

FaceImage load_pgm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>()};
    try {
        return load_pgm(bytes);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::vector<std::uint8_t> encode_pgm(const FaceImage& image, PgmFormat format) {
    std::string header = (format == PgmFormat::Binary ? "P5\n" : "P2\n");
    header += std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    if (format == PgmFormat::Binary) {
        out.insert(out.end(), image.pixels.begin(), image.pixels.end());
    } else {
        std::string body;
        for (std::size_t i = 0; i < image.pixels.size(); ++i) {
            body += std::to_string(image.pixels[i]);
            body += ((i + 1) % image.width == 0) ? '\n' : ' ';
        }
        out.insert(out.end(), body.begin(), body.end());
    }
    return out;
}

std::vector<FaceImage> scan_orl_layout(const std::filesystem::path& root) {
    if (!std::filesystem::is_directory(root)) {
        throw IoError("dataset root not found: " + root.string());
    }

    // Subjects are the contiguous run s1, s2, … ; a numbering gap below the
    // highest present index is a listing error.
    int max_subject = 0;
    for (const auto& entry : std::filesystem::directory_iterator(root)) {
        const std::string name = entry.path().filename().string();
        if (name.size() > 1 && name[0] == 's' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](unsigned char c) { return std::isdigit(c); })) {
            max_subject = std::max(max_subject, std::stoi(name.substr(1)));
        }
    }
    if (max_subject == 0) {
        throw IoError("no subject directories (s1, s2, …) under " + root.string());
    }

    std::vector<FaceImage> images;
    int width = -1;
    int height = -1;
    for (int subject = 1; subject <= max_subject; ++subject) {
        const auto dir = root / ("s" + std::to_string(subject));
        if (!std::filesystem::is_directory(dir)) {
            throw IoError("missing subject directory: " + dir.string());
        }
        int max_sample = 0;
        for (int sample = 1; sample <= 10; ++sample) {
            if (std::filesystem::exists(dir / (std::to_string(sample) + ".pgm"))) {
                max_sample = sample;
            }
        }
        if (max_sample == 0) {
            throw IoError("missing image file: " + (dir / "1.pgm").string());
        }
        for (int sample = 1; sample <= max_sample; ++sample) {
            const auto file = dir / (std::to_string(sample) + ".pgm");
            if (!std::filesystem::exists(file)) {
                throw IoError("missing image file: " + file.string());
            }
            FaceImage image = load_pgm_file(file);
            image.subject_id = subject;
            image.sample_index = sample;
            if (width < 0) {
                width = image.width;
                height = image.height;
            } else if (image.width != width || image.height != height) {
                throw FormatError("dimension mismatch: " + file.string() + " is " +
                                  std::to_string(image.width) + "x" +
                                  std::to_string(image.height) + ", dataset is " +
                                  std::to_string(width) + "x" + std::to_string(height));
            }
            images.push_back(std::move(image));
        }
    }
    return images;
}

Vector vectorize(const FaceImage& image) {
    Vector v(static_cast<Eigen::Index>(image.pixels.size()));
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = static_cast<double>(image.pixels[i]);
    }
    return v;
}

FaceImage reshape(const Vector& values, int width, int height) {
    if (values.size() != static_cast<Eigen::Index>(width) * height) {
        throw ContractError("reshape: " + std::to_string(values.size()) +
                            " values do not form " + std::to_string(width) + "x" +
                            std::to_string(height));
    }
    FaceImage image;
    image.width = width;
    image.height = height;
    image.pixels.resize(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        image.pixels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(values[i]);
    }
    return image;
}

DatasetSplit make_split(const std::vector<FaceImage>& images,
                        const std::set<int>& train_samples,
                        const std::set<int>& test_samples,
                        const std::set<int>& validation_samples) {
    auto check_range = [](const std::set<int>& s, const char* name) {
        for (int i : s) {
            if (i < 1 || i > 10) {
                throw ContractError(std::string("make_split: ") + name + " index " +
                                    std::to_string(i) + " outside 1..10");
            }
        }
    };
    check_range(train_samples, "train");
    check_range(test_samples, "test");
    check_range(validation_samples, "validation");

    auto disjoint = [](const std::set<int>& a, const std::set<int>& b) {
        return std::none_of(a.begin(), a.end(), [&](int i) { return b.count(i) > 0; });
    };
    if (!disjoint(train_samples, test_samples) ||
        !disjoint(train_samples, validation_samples) ||
        !disjoint(test_samples, validation_samples)) {
        throw ContractError("make_split: sample index sets overlap");
    }

    std::vector<const FaceImage*> ordered;
    ordered.reserve(images.size());
    for (const auto& image : images) ordered.push_back(&image);
    std::stable_sort(ordered.begin(), ordered.end(), [](const FaceImage* a, const FaceImage* b) {
        return std::pair(a->subject_id, a->sample_index) <
               std::pair(b->subject_id, b->sample_index);
    });

    DatasetSplit split;
    for (const FaceImage* image : ordered) {
        LabeledVector record{vectorize(*image), image->subject_id, image->sample_index};
        if (train_samples.count(image->sample_index)) {
            split.train.push_back(std::move(record));
        } else if (test_samples.count(image->sample_index)) {
            split.test.push_back(std::move(record));
        } else if (validation_samples.count(image->sample_index)) {
            split.validation.push_back(std::move(record));
        }
    }
    return split;
}

}  // namespace facekit
