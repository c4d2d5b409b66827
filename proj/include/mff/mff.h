// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

// C interface to the multi-focus fusion library.
//
// Objects are opaque handles created by the library and released with the
// matching *_destroy function. Every fallible call returns an mff_status;
// on failure, mff_last_error() describes the problem for the calling thread
// until its next failing call. Output handles are written only on success.

#ifndef MFF_MFF_H
#define MFF_MFF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MFF_BUILDING_LIBRARY)
#define MFF_API __declspec(dllexport)
#else
#define MFF_API __declspec(dllimport)
#endif
#else
#define MFF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mff_status {
  MFF_OK = 0,
  MFF_ERR_INVALID_ARGUMENT = 1,
  MFF_ERR_DIMENSION_MISMATCH = 2,
  MFF_ERR_PARSE = 3,
  MFF_ERR_IO = 4,
  MFF_ERR_DEGENERATE = 5,
  MFF_ERR_BUFFER_TOO_SMALL = 6,
  MFF_ERR_INTERNAL = 99
} mff_status;

typedef enum mff_pgm_mode { MFF_PGM_ASCII = 0, MFF_PGM_BINARY = 1 } mff_pgm_mode;

typedef enum mff_tie_break { MFF_TIE_LOWEST_INDEX = 0, MFF_TIE_HIGHEST_INDEX = 1 } mff_tie_break;

typedef enum mff_geometry {
  MFF_SPLIT_VERTICAL = 0,
  MFF_SPLIT_HORIZONTAL = 1,
  MFF_SPLIT_DIAG_MAIN = 2,
  MFF_SPLIT_DIAG_ANTI = 3
} mff_geometry;

typedef struct mff_image mff_image;
typedef struct mff_selection mff_selection;

MFF_API const char* mff_version(void);
MFF_API const char* mff_status_name(mff_status status);
MFF_API const char* mff_last_error(void);

/* Images */
MFF_API mff_status mff_image_create(size_t width, size_t height, const double* samples,
                                    mff_image** out);
MFF_API mff_status mff_image_clone(const mff_image* img, mff_image** out);
MFF_API void mff_image_destroy(mff_image* img);
MFF_API size_t mff_image_width(const mff_image* img);
MFF_API size_t mff_image_height(const mff_image* img);
/* Borrowed pointer to width*height samples, valid while img lives. */
MFF_API const double* mff_image_samples(const mff_image* img);

MFF_API mff_status mff_pgm_decode(const uint8_t* bytes, size_t len, mff_image** out);
/* Pass dst = NULL to query the encoded size through *written. */
MFF_API mff_status mff_pgm_encode(const mff_image* img, mff_pgm_mode mode, uint8_t* dst,
                                  size_t capacity, size_t* written);
MFF_API mff_status mff_pgm_read_file(const char* path, mff_image** out);
MFF_API mff_status mff_pgm_write_file(const mff_image* img, const char* path, mff_pgm_mode mode);
/* Rounds half-up and clamps to [0, 255], i.e. what the encoder would store. */
MFF_API mff_status mff_image_quantize(const mff_image* img, mff_image** out);
MFF_API mff_status mff_image_extract(const mff_image* img, size_t x0, size_t y0, size_t w,
                                     size_t h, mff_image** out);

/* Window statistics */
MFF_API mff_status mff_sample_std(const double* values, size_t count, double* out);
/* Per-block sample std over a k x k tiling; *nx and *ny are always set. */
MFF_API mff_status mff_block_std_map(const mff_image* img, size_t k, double* dst,
                                     size_t capacity, size_t* nx, size_t* ny);

/* Maximum standard deviation fusion; selection may be NULL. */
MFF_API mff_status mff_fuse_max_std(const mff_image* const* images, size_t count, size_t k,
                                    mff_tie_break tie_break, mff_image** fused,
                                    mff_selection** selection);
MFF_API void mff_selection_destroy(mff_selection* sel);
MFF_API size_t mff_selection_nx(const mff_selection* sel);
MFF_API size_t mff_selection_ny(const mff_selection* sel);
MFF_API size_t mff_selection_k(const mff_selection* sel);
/* Borrowed pointer to nx*ny row-major source indices. */
MFF_API const size_t* mff_selection_indices(const mff_selection* sel);
MFF_API mff_status mff_selection_render(const mff_selection* sel, size_t inputs,
                                        mff_image** out);

/* Baselines */
MFF_API mff_status mff_fuse_average(const mff_image* const* images, size_t count,
                                    mff_image** out);
/* weights (count entries) and fell_back may be NULL. */
MFF_API mff_status mff_fuse_pca(const mff_image* const* images, size_t count, mff_image** out,
                                double* weights, int* fell_back);
MFF_API mff_status mff_fuse_wavelet(const mff_image* const* images, size_t count, size_t levels,
                                    mff_image** out);

/* Metrics. psnr reports +infinity for identical images. */
MFF_API mff_status mff_rmse(const mff_image* a, const mff_image* b, double* out);
MFF_API mff_status mff_psnr(const mff_image* a, const mff_image* b, double* out);
MFF_API mff_status mff_uqi(const mff_image* a, const mff_image* b, size_t window, double* out);
MFF_API mff_status mff_ssim(const mff_image* a, const mff_image* b, double* out);
/* per_input (count entries) may be NULL. */
MFF_API mff_status mff_ssim_to_inputs(const mff_image* fused, const mff_image* const* inputs,
                                      size_t count, double* mean, double* per_input);

/* Synthetic focus pairs */
MFF_API mff_status mff_gaussian_blur(const mff_image* img, double sigma, size_t radius,
                                     mff_image** out);
MFF_API mff_status mff_make_pair(const mff_image* original, mff_geometry geometry, double sigma,
                                 size_t radius, mff_image** input_a, mff_image** input_b);

#ifdef __cplusplus
}
#endif

#endif  // MFF_MFF_H
