#include <edgetext/imageio.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace edgetext {

namespace {

using Kind = ImageFormatError::Kind;

// Skips whitespace and '#' comments between header tokens.
void skip_header_space(std::istream& in)
{
  for (;;) {
    const int c = in.peek();
    if (c == std::char_traits<char>::eof())
      return;
    if (c == '#') {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    } else if (std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

int read_header_int(std::istream& in, const char* field)
{
  skip_header_space(in);
  std::string digits;
  while (std::isdigit(in.peek()) && digits.size() < 10)
    digits.push_back(static_cast<char>(in.get()));
  if (digits.empty())
    throw ImageFormatError(Kind::malformed_header,
                           std::string("pnm header: expected integer ") + field);
  const long long v = std::stoll(digits);
  if (v > std::numeric_limits<int>::max())
    throw ImageFormatError(Kind::malformed_header, std::string("pnm header: ") + field +
                                                       " out of range");
  return static_cast<int>(v);
}

void read_payload(std::istream& in, std::vector<std::uint8_t>& buf)
{
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  const auto got = static_cast<std::size_t>(in.gcount());
  if (got != buf.size())
    throw ImageFormatError(Kind::truncated_payload, "pnm payload truncated: expected " +
                                                        std::to_string(buf.size()) +
                                                        " bytes, got " + std::to_string(got));
}

std::ofstream open_for_write(const std::filesystem::path& path)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void check_written(std::ostream& out, const std::string& what)
{
  out.flush();
  if (!out)
    throw IoError("write failed: " + what);
}

}  // namespace

AnyImage load_image(std::istream& in)
{
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (in.gcount() != 2 || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '6'))
    throw ImageFormatError(Kind::unsupported_magic, "not a binary P5/P6 portable pixmap");
  const bool color = magic[1] == '6';

  const int width = read_header_int(in, "width");
  const int height = read_header_int(in, "height");
  const int maxval = read_header_int(in, "maxval");
  if (width < 1 || height < 1)
    throw ImageFormatError(Kind::malformed_header, "pnm header: zero image dimension");
  if (maxval != 255)
    throw ImageFormatError(Kind::unsupported_maxval,
                           "pnm maxval " + std::to_string(maxval) + " unsupported (need 255)");
  // Exactly one whitespace byte separates the header from the payload.
  const int sep = in.get();
  if (sep == std::char_traits<char>::eof() || !std::isspace(sep))
    throw ImageFormatError(Kind::malformed_header, "pnm header: missing whitespace after maxval");

  const std::size_t pixels = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> buf(color ? 3 * pixels : pixels);
  read_payload(in, buf);
  if (color)
    return RgbImage(width, height, std::move(buf));
  return GrayImage(width, height, std::move(buf));
}

AnyImage load_image(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open " + path.string());
  return load_image(in);
}

void save_pgm(const GrayImage& img, std::ostream& out)
{
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
  const auto px = img.pixels();
  out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
  check_written(out, "pgm stream");
}

void save_pgm(const GrayImage& img, const std::filesystem::path& path)
{
  auto out = open_for_write(path);
  save_pgm(img, out);
}

void save_ppm(const RgbImage& img, std::ostream& out)
{
  out << "P6\n" << img.width() << ' ' << img.height() << "\n255\n";
  const auto bytes = img.interleaved();
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  check_written(out, "ppm stream");
}

void save_ppm(const RgbImage& img, const std::filesystem::path& path)
{
  auto out = open_for_write(path);
  save_ppm(img, out);
}

GrayImage to_grayscale(const RgbImage& img)
{
  GrayImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const auto p = img(x, y);
      // Weights scaled by 1000 so the luma is exact before rounding half-up.
      const int scaled = 299 * p.r + 587 * p.g + 114 * p.b;
      out(x, y) = static_cast<std::uint8_t>(std::min(255, (scaled + 500) / 1000));
    }
  }
  return out;
}

GrayImage to_grayscale(const AnyImage& img)
{
  if (const auto* gray = std::get_if<GrayImage>(&img))
    return *gray;
  return to_grayscale(std::get<RgbImage>(img));
}

bool is_supported_image_file(const std::filesystem::path& p)
{
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".pgm" || ext == ".ppm" || ext == ".pnm";
}

FrameSequence load_frame_sequence(const std::filesystem::path& directory)
{
  std::error_code ec;
  std::filesystem::directory_iterator it(directory, ec);
  if (ec)
    throw IoError("cannot read directory " + directory.string() + ": " + ec.message());

  FrameSequence seq;
  for (const auto& entry : it) {
    if (entry.is_regular_file() && is_supported_image_file(entry.path()))
      seq.frames.push_back(entry.path());
  }
  std::sort(seq.frames.begin(), seq.frames.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
  return seq;
}

namespace {

bool is_blank(const std::string& s)
{
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string trimmed(const std::string& s)
{
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Rect parse_box_line(const std::string& line, std::size_t lineno)
{
  std::string normalized = line;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream fields(normalized);
  long long v[4];
  std::string token;
  for (int i = 0; i < 4; ++i) {
    if (!(fields >> token))
      throw AnnotationParseError(lineno, "expected 4 integers \"x y w h\"");
    std::size_t used = 0;
    try {
      v[i] = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size())
      throw AnnotationParseError(lineno, "non-integer token '" + token + "'");
    if (v[i] < std::numeric_limits<int>::min() || v[i] > std::numeric_limits<int>::max())
      throw AnnotationParseError(lineno, "value out of range '" + token + "'");
  }
  if (fields >> token)
    throw AnnotationParseError(lineno, "trailing token '" + token + "'");
  if (v[2] < 1 || v[3] < 1)
    throw AnnotationParseError(lineno, "width and height must be >= 1");
  return Rect{static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]),
              static_cast<int>(v[3])};
}

}  // namespace

std::vector<Rect> load_annotations(std::istream& in)
{
  std::vector<Rect> boxes;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line) || trimmed(line).front() == '#')
      continue;
    boxes.push_back(parse_box_line(line, lineno));
  }
  return boxes;
}

std::vector<Rect> load_annotations(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open " + path.string());
  return load_annotations(in);
}

void write_detections(const std::vector<Rect>& boxes, std::ostream& out)
{
  for (const auto& b : boxes)
    out << b.x << ' ' << b.y << ' ' << b.w << ' ' << b.h << '\n';
  check_written(out, "detection stream");
}

std::vector<FrameSection> load_sectioned_detections(std::istream& in)
{
  static const std::string header = "# frame ";
  std::vector<FrameSection> sections;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trimmed(line);
    if (t.rfind(header, 0) == 0) {
      sections.push_back({trimmed(t.substr(header.size())), {}});
      continue;
    }
    if (t.empty() || t.front() == '#')
      continue;
    if (sections.empty())
      throw AnnotationParseError(lineno, "box record before any '# frame' header");
    sections.back().boxes.push_back(parse_box_line(line, lineno));
  }
  return sections;
}

}  // namespace edgetext
