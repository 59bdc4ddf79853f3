#include "hrd/dsp/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "hrd/errors.hpp"

namespace hrd::dsp {

namespace {

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

}  // namespace

void validate(const AudioClip& clip) {
  if (clip.sample_rate <= 0) throw InputError("audio clip sample rate must be positive");
  for (float s : clip.samples) {
    if (!std::isfinite(s)) throw InputError("audio clip contains non-finite samples");
  }
}

AudioClip load_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open wav file: " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() < 44 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw InputError("not a RIFF/WAVE file: " + path.string());
  }

  int channels = 0;
  int sample_rate = 0;
  int bits = 0;
  const unsigned char* data_ptr = nullptr;
  std::size_t data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::uint32_t chunk_len = read_u32(chunk + 4);
    const unsigned char* body = chunk + 8;
    if (pos + 8 + chunk_len > bytes.size()) break;
    if (std::memcmp(chunk, "fmt ", 4) == 0 && chunk_len >= 16) {
      const std::uint16_t format = read_u16(body);
      channels = read_u16(body + 2);
      sample_rate = static_cast<int>(read_u32(body + 4));
      bits = read_u16(body + 14);
      if (format != 1) throw InputError("wav file is not PCM: " + path.string());
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data_ptr = body;
      data_len = chunk_len;
    }
    pos += 8 + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (channels <= 0 || sample_rate <= 0 || data_ptr == nullptr) {
    throw InputError("wav file missing fmt or data chunk: " + path.string());
  }
  if (bits != 16) throw InputError("only 16-bit PCM wav is supported: " + path.string());

  const std::size_t frame_bytes = static_cast<std::size_t>(channels) * 2;
  const std::size_t frames = data_len / frame_bytes;
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.resize(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (int c = 0; c < channels; ++c) {
      const unsigned char* s = data_ptr + f * frame_bytes + static_cast<std::size_t>(c) * 2;
      const std::int16_t v = static_cast<std::int16_t>(s[0] | (s[1] << 8));
      acc += static_cast<double>(v) / 32768.0;
    }
    clip.samples[f] = static_cast<float>(acc / channels);
  }
  return clip;
}

void save_wav(const AudioClip& clip, const std::filesystem::path& path) {
  validate(clip);
  const std::uint32_t data_len = static_cast<std::uint32_t>(clip.samples.size() * 2);
  std::vector<unsigned char> out;
  out.reserve(44 + data_len);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32(out, 36 + data_len);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(clip.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(clip.sample_rate) * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32(out, data_len);
  for (float s : clip.samples) {
    const float clamped = std::clamp(s, -1.0f, 1.0f);
    const int v = static_cast<int>(std::lround(clamped * 32767.0));
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot write wav file: " + path.string());
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
}

}  // namespace hrd::dsp
