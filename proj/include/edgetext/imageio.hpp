#pragma once

// Portable pixmap (P5/P6, maxval 255) codec, grayscale conversion, frame
// directory listing and the plain-text box format used for annotations and
// detections.

#include <edgetext/image.hpp>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace edgetext {

class ImageFormatError : public std::runtime_error
{
public:
  enum class Kind
  {
    unsupported_magic,
    malformed_header,
    unsupported_maxval,
    truncated_payload,
  };

  ImageFormatError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

/// Raised for filesystem and stream failures (missing files, failed writes).
class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class AnnotationParseError : public std::runtime_error
{
public:
  AnnotationParseError(std::size_t line, const std::string& why)
    : std::runtime_error("annotation line " + std::to_string(line) + ": " + why), line_(line)
  {
  }
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

using AnyImage = std::variant<GrayImage, RgbImage>;

AnyImage load_image(std::istream& in);
AnyImage load_image(const std::filesystem::path& path);

void save_pgm(const GrayImage& img, std::ostream& out);
void save_pgm(const GrayImage& img, const std::filesystem::path& path);
void save_ppm(const RgbImage& img, std::ostream& out);
void save_ppm(const RgbImage& img, const std::filesystem::path& path);

/// BT.601 luma, rounded half-up.
GrayImage to_grayscale(const RgbImage& img);
/// Returns the image unchanged if it is already gray.
GrayImage to_grayscale(const AnyImage& img);

/// Ordered list of frame files standing in for a video.
struct FrameSequence
{
  std::vector<std::filesystem::path> frames;
};

bool is_supported_image_file(const std::filesystem::path& p);

/// Supported image files (.pgm/.ppm/.pnm) of a directory, sorted by filename.
FrameSequence load_frame_sequence(const std::filesystem::path& directory);

/// One "x y w h" record per non-empty line; commas also separate fields and
/// lines starting with '#' are comments.
std::vector<Rect> load_annotations(std::istream& in);
std::vector<Rect> load_annotations(const std::filesystem::path& path);

void write_detections(const std::vector<Rect>& boxes, std::ostream& out);

/// A detection file holding several frames, each introduced by "# frame <name>".
struct FrameSection
{
  std::string name;
  std::vector<Rect> boxes;
};

std::vector<FrameSection> load_sectioned_detections(std::istream& in);

}  // namespace edgetext
