//! `F₂³` as bytes `a + 2b + 4c`, and `GL₃(F₂)` as column triples.

/// `y·x mod 2`.
pub fn dot(x: u8, y: u8) -> bool {
    (x & y).count_ones() % 2 == 1
}

/// `(−1)^{y·x}`.
pub fn sign(x: u8, y: u8) -> i64 {
    if dot(x, y) {
        -1
    } else {
        1
    }
}

/// An invertible 3×3 matrix over `F₂`, stored by the images of `e1, e2, e3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mat3 {
    cols: [u8; 3],
}

impl Mat3 {
    pub fn apply(self, x: u8) -> u8 {
        (0..3)
            .filter(|&i| x >> i & 1 == 1)
            .fold(0, |acc, i| acc ^ self.cols[i])
    }

    pub fn transpose(self) -> Mat3 {
        let mut cols = [0u8; 3];
        for (j, col) in cols.iter_mut().enumerate() {
            for i in 0..3 {
                *col |= (self.cols[i] >> j & 1) << i;
            }
        }
        Mat3 { cols }
    }
}

/// All 168 elements of `GL₃(F₂)`.
pub fn gl3() -> Vec<Mat3> {
    let mut out = Vec::with_capacity(168);
    for c1 in 1..8u8 {
        for c2 in 1..8u8 {
            if c2 == c1 {
                continue;
            }
            for c3 in 1..8u8 {
                if [c1, c2, c1 ^ c2].contains(&c3) {
                    continue;
                }
                out.push(Mat3 { cols: [c1, c2, c3] });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_order_and_bijectivity() {
        let g = gl3();
        assert_eq!(g.len(), 168);
        for a in &g {
            let mut img: Vec<u8> = (0..8).map(|x| a.apply(x)).collect();
            img.sort();
            assert_eq!(img, (0..8).collect::<Vec<_>>());
            assert_eq!(a.transpose().transpose(), *a);
        }
    }

    #[test]
    fn transpose_is_adjoint() {
        for a in gl3() {
            for x in 0..8 {
                for y in 0..8 {
                    assert_eq!(dot(a.apply(x), y), dot(x, a.transpose().apply(y)));
                }
            }
        }
    }
}
