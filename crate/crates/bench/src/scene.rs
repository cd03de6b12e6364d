//! The bundled 256×256 test image.
//!
//! A procedurally drawn underwater scene: a lit water column fading with
//! depth, light shafts, a diver silhouette with an air tank and fins, a
//! few fish and bubbles, and a textured seabed. It is generated here and
//! stored as `assets/scene.pgm`; a test keeps the two in sync.

use aquawave::image::Image;

pub const SCENE_SIZE: usize = 256;

/// The bundled scene as stored in the repository.
pub const SCENE_PGM: &[u8] = include_bytes!("../assets/scene.pgm");

fn hash(x: i64, y: i64) -> f64 {
    let mut h = (x as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (y as u64).wrapping_mul(0xC2B2_AE3D_27D4_EB4F);
    h ^= h >> 31;
    h = h.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    h ^= h >> 29;
    (h >> 11) as f64 / (1u64 << 53) as f64
}

/// Bilinearly interpolated lattice noise in [0, 1).
fn value_noise(x: f64, y: f64, cell: f64) -> f64 {
    let (gx, gy) = (x / cell, y / cell);
    let (x0, y0) = (gx.floor(), gy.floor());
    let (tx, ty) = (gx - x0, gy - y0);
    let (sx, sy) = (tx * tx * (3.0 - 2.0 * tx), ty * ty * (3.0 - 2.0 * ty));
    let (i, j) = (x0 as i64, y0 as i64);
    let top = hash(i, j) * (1.0 - sx) + hash(i + 1, j) * sx;
    let bottom = hash(i, j + 1) * (1.0 - sx) + hash(i + 1, j + 1) * sx;
    top * (1.0 - sy) + bottom * sy
}

fn in_ellipse(x: f64, y: f64, cx: f64, cy: f64, rx: f64, ry: f64, angle: f64) -> bool {
    let (s, c) = angle.sin_cos();
    let (dx, dy) = (x - cx, y - cy);
    let u = (dx * c + dy * s) / rx;
    let v = (-dx * s + dy * c) / ry;
    u * u + v * v <= 1.0
}

fn pixel(x: f64, y: f64) -> f64 {
    // Water: brighter near the surface, with soft slanted light shafts.
    let mut v = 165.0 - 0.42 * y;
    let shaft = ((x + 0.45 * y) / 23.0).sin().max(0.0).powi(6);
    v += 22.0 * shaft * (1.0 - y / 256.0);

    // Seabed with rocky texture.
    let bed = 206.0 + 9.0 * (x / 31.0).sin() + 5.0 * (x / 11.0 + 1.3).sin();
    if y > bed {
        v = 92.0 + 45.0 * value_noise(x, y, 9.0) + 18.0 * value_noise(x, y, 3.0);
        if in_ellipse(x, y, 196.0, 222.0, 26.0, 14.0, 0.0) {
            v = 58.0 + 30.0 * value_noise(x, y, 5.0);
        }
    }

    // Fish.
    for &(cx, cy, r) in &[(52.0, 70.0, 9.0), (70.0, 84.0, 7.0), (212.0, 48.0, 8.0)] {
        if in_ellipse(x, y, cx, cy, r, r * 0.45, 0.0)
            || (x > cx + r * 0.8 && x < cx + r * 1.5 && (y - cy).abs() < (x - cx - r * 0.8) * 0.8)
        {
            v = 205.0;
        }
    }

    // Diver: tank, body, head, arm, legs and fins.
    let dark = 34.0;
    let diver = in_ellipse(x, y, 128.0, 120.0, 44.0, 15.0, -0.35)
        || in_ellipse(x, y, 80.0, 140.0, 11.0, 11.0, 0.0)
        || in_ellipse(x, y, 112.0, 148.0, 26.0, 5.0, 0.5)
        || in_ellipse(x, y, 178.0, 94.0, 24.0, 6.0, -0.2)
        || in_ellipse(x, y, 176.0, 110.0, 24.0, 6.0, 0.15)
        || in_ellipse(x, y, 208.0, 84.0, 12.0, 4.0, -0.7)
        || in_ellipse(x, y, 206.0, 118.0, 12.0, 4.0, 0.5);
    if diver {
        v = dark;
    }
    if in_ellipse(x, y, 130.0, 104.0, 30.0, 7.0, -0.35) {
        v = 120.0;
    }
    if in_ellipse(x, y, 77.0, 137.0, 5.0, 4.0, 0.0) {
        v = 150.0;
    }

    // Bubbles rising from the regulator.
    for &(cx, cy, r) in &[
        (74.0, 118.0, 3.0),
        (70.0, 100.0, 4.0),
        (76.0, 78.0, 5.0),
        (68.0, 52.0, 4.0),
        (73.0, 28.0, 6.0),
    ] {
        let d = (x - cx).hypot(y - cy);
        if d <= r {
            v = if d > r - 1.5 { 235.0 } else { 190.0 };
        }
    }
    v
}

/// Draws the scene with integer intensities.
pub fn generate_scene() -> Image {
    Image::from_fn(SCENE_SIZE, SCENE_SIZE, |x, y| {
        pixel(x as f64 + 0.5, y as f64 + 0.5)
            .round()
            .clamp(0.0, 255.0)
    })
    .expect("scene dimensions are valid")
}

/// Decodes the bundled copy.
pub fn bundled_scene() -> Image {
    let header = format!("P5\n{SCENE_SIZE} {SCENE_SIZE}\n255\n");
    let payload = &SCENE_PGM[header.len()..];
    Image::new(
        SCENE_SIZE,
        SCENE_SIZE,
        payload.iter().map(|&b| b as f64).collect(),
    )
    .expect("bundled scene is 256x256")
}
