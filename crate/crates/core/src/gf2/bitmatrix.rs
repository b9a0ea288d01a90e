use std::fmt;

/// Dense matrix over F₂ with bit-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Rows given as bit masks, bit `j` of `rows[i]` being entry `(i, j)`.
    /// Needs `cols ≤ 64`.
    pub fn from_row_masks(cols: usize, rows: &[u64]) -> Self {
        assert!(cols <= 64);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, &r) in rows.iter().enumerate() {
            m.data[i] = r & mask(cols);
        }
        m
    }

    /// The matrix whose column `j` is the mask `cols[j]` (rows ≤ 64).
    pub fn from_column_masks(rows: usize, cols: &[u64]) -> Self {
        assert!(rows <= 64);
        let mut m = Self::zeros(rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for i in 0..rows {
                if c >> i & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.data[i * self.words + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] ^= 1 << (j % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    /// Row `i` as a mask (cols ≤ 64).
    pub fn row_mask(&self, i: usize) -> u64 {
        self.data[i * self.words]
    }

    /// Column `j` as a mask (rows ≤ 64).
    pub fn column_mask(&self, j: usize) -> u64 {
        (0..self.rows).fold(0, |acc, i| acc | (self.get(i, j) as u64) << i)
    }

    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let (src, dst) = (rhs.row(k).to_vec(), i * out.words);
                    for (w, s) in src.into_iter().enumerate() {
                        out.data[dst + w] ^= s;
                    }
                }
            }
        }
        out
    }

    /// `M·v` for a column vector given as a mask (cols ≤ 64, rows ≤ 64).
    pub fn apply(&self, v: u64) -> u64 {
        (0..self.rows).fold(0, |acc, i| acc | ((self.row_mask(i) & v).count_ones() as u64 & 1) << i)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            if pivot != rank {
                for w in 0..m.words {
                    m.data.swap(pivot * m.words + w, rank * m.words + w);
                }
            }
            for r in 0..m.rows {
                if r != rank && m.get(r, col) {
                    for w in 0..m.words {
                        let v = m.data[rank * m.words + w];
                        m.data[r * m.words + w] ^= v;
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Dimension of the right kernel `{v : M·v = 0}`.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

fn mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1 << bits) - 1
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: String = (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}
