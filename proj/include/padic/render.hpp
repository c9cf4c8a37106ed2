#pragma once

#include <string>

#include "padic/frame_builder.hpp"

namespace padic {

enum class RenderWhat { PhiHat, PhiHatShifted, Wavelets };
enum class RenderFormat { Ascii, Svg };

/**
 * Monna-line rendering of a frame's dual-side data: each dual coset is the
 * interval [lambda'(rep), lambda'(rep) + p^level] with its value label, with
 * annulus brackets for the subgroups G_k^bot.  Output is deterministic.
 */
std::string render(const FrameSystem& fs, RenderWhat what, RenderFormat format);

}  // namespace padic
