//! The six-letter rotor machine.
//!
//! The key is the rotor's initial position, named by color. Each keypress
//! substitutes through the table of the current position, then the rotor
//! advances one position in the fixed cyclic order. Every position table is
//! a fixed-point-free involution (input circle -> rotor -> reflector ->
//! back), so decryption is the same operation as encryption.

use super::ClassicalError;

/// The six plaintext/ciphertext letters, in table column order.
pub const ROTOR_ALPHABET: [char; 6] = ['O', 'P', 'R', 'S', 'T', 'Y'];

/// Rotor position, identified by the color wired to the letter O.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RotorKey {
    /// Position 0 in the cyclic order.
    Red,
    /// Position 1.
    White,
    /// Position 2.
    Purple,
    /// Position 3.
    Green,
    /// Position 4.
    Yellow,
    /// Position 5.
    Blue,
}

impl RotorKey {
    /// All keys in cyclic rotation order.
    pub const ALL: [RotorKey; 6] = [
        RotorKey::Red,
        RotorKey::White,
        RotorKey::Purple,
        RotorKey::Green,
        RotorKey::Yellow,
        RotorKey::Blue,
    ];

    /// Index in the cyclic order.
    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&k| k == self).unwrap()
    }

    /// Lowercase color name.
    pub fn name(self) -> &'static str {
        match self {
            RotorKey::Red => "red",
            RotorKey::White => "white",
            RotorKey::Purple => "purple",
            RotorKey::Green => "green",
            RotorKey::Yellow => "yellow",
            RotorKey::Blue => "blue",
        }
    }

    /// Parse a color name.
    pub fn parse(s: &str) -> Result<Self, ClassicalError> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| ClassicalError::BadRotorKey(s.to_string()))
    }
}

/// The six per-position substitutions in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionTables {
    /// tables[position][letter index] = substituted letter index
    tables: [[u8; 6]; 6],
}

fn letter_index(c: char) -> Result<usize, ClassicalError> {
    ROTOR_ALPHABET
        .iter()
        .position(|&a| a == c.to_ascii_uppercase())
        .ok_or(ClassicalError::BadRotorChar(c))
}

impl PositionTables {
    /// Build from six rows of substituted letters (row order = cyclic key
    /// order), checking that every row is a fixed-point-free involution.
    pub fn new(rows: [[char; 6]; 6]) -> Result<Self, ClassicalError> {
        let mut tables = [[0u8; 6]; 6];
        for (pos, row) in rows.iter().enumerate() {
            for (i, &c) in row.iter().enumerate() {
                tables[pos][i] = letter_index(c)? as u8;
            }
            let t = &tables[pos];
            let involution_without_fixed_points =
                (0..6).all(|i| t[i] as usize != i && t[t[i] as usize] as usize == i);
            if !involution_without_fixed_points {
                return Err(ClassicalError::BadRotorTable(
                    RotorKey::ALL[pos].name().to_string(),
                ));
            }
        }
        Ok(PositionTables { tables })
    }

    /// Parse CSV rows of the form `red,T,Y,S,R,O,P` in cyclic key order.
    pub fn parse_csv(text: &str) -> Result<Self, ClassicalError> {
        let mut rows = [[' '; 6]; 6];
        let mut seen = 0;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split(',').map(str::trim);
            let key = fields
                .next()
                .ok_or_else(|| ClassicalError::BadRotorTableLine(line.to_string()))?;
            let key = RotorKey::parse(key)?;
            let mut row = [' '; 6];
            for slot in row.iter_mut() {
                let f = fields
                    .next()
                    .ok_or_else(|| ClassicalError::BadRotorTableLine(line.to_string()))?;
                let mut chars = f.chars();
                *slot = chars
                    .next()
                    .filter(|_| chars.next().is_none())
                    .ok_or_else(|| ClassicalError::BadRotorTableLine(line.to_string()))?;
            }
            rows[key.index()] = row;
            seen += 1;
        }
        if seen != 6 {
            return Err(ClassicalError::BadRotorTableLine(format!(
                "expected 6 rows, got {seen}"
            )));
        }
        Self::new(rows)
    }

    /// Substitute one letter at a rotor position.
    pub fn substitute(&self, position: usize, c: char) -> Result<char, ClassicalError> {
        let i = letter_index(c)?;
        Ok(ROTOR_ALPHABET[self.tables[position % 6][i] as usize])
    }
}

/// Encrypt text under a key: letter t (0-based) goes through the table at
/// position (key + t) mod 6. Since every table is an involution this is
/// also the decryption map.
pub fn rotor_encrypt(
    tables: &PositionTables,
    key: RotorKey,
    text: &str,
) -> Result<String, ClassicalError> {
    let k = key.index();
    text.chars()
        .enumerate()
        .map(|(t, c)| tables.substitute(k + t, c))
        .collect()
}

/// Decrypt under all six keys.
pub fn rotor_bruteforce(
    tables: &PositionTables,
    ciphertext: &str,
) -> Result<Vec<(RotorKey, String)>, ClassicalError> {
    RotorKey::ALL
        .into_iter()
        .map(|k| rotor_encrypt(tables, k, ciphertext).map(|p| (k, p)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    #[test]
    fn worked_example_from_red() {
        let tables = data::rotor_tables();
        assert_eq!(rotor_encrypt(&tables, RotorKey::Red, "O").unwrap(), "T");
        assert_eq!(rotor_encrypt(&tables, RotorKey::Red, "OO").unwrap(), "TR");
        assert_eq!(rotor_encrypt(&tables, RotorKey::Red, "OOT").unwrap(), "TRS");
    }

    #[test]
    fn empty_text_brute_force() {
        let tables = data::rotor_tables();
        let all = rotor_bruteforce(&tables, "").unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|(_, p)| p.is_empty()));
    }

    #[test]
    fn encryption_is_an_involution_per_key() {
        let tables = data::rotor_tables();
        let ct = data::rotor_ciphertext();
        for (key, plain) in rotor_bruteforce(&tables, &ct).unwrap() {
            assert_eq!(rotor_encrypt(&tables, key, &plain).unwrap(), ct);
        }
    }

    #[test]
    fn yellow_key_reads_the_message() {
        let tables = data::rotor_tables();
        let all = rotor_bruteforce(&tables, &data::rotor_ciphertext()).unwrap();
        let yellow = all.iter().find(|(k, _)| *k == RotorKey::Yellow).unwrap();
        assert_eq!(yellow.1, "POSTTOTOPOOPSSORRYSTOPROTOR");
    }

    #[test]
    fn bad_inputs_rejected() {
        let tables = data::rotor_tables();
        assert_eq!(
            rotor_encrypt(&tables, RotorKey::Red, "OX"),
            Err(ClassicalError::BadRotorChar('X'))
        );
        assert!(RotorKey::parse("mauve").is_err());
        // a table with a fixed point is rejected
        let mut rows = [[' '; 6]; 6];
        for (pos, r) in [
            ["T", "Y", "S", "R", "O", "P"],
            ["R", "S", "O", "P", "Y", "T"],
            ["Y", "R", "P", "T", "S", "O"],
            ["S", "R", "P", "O", "Y", "T"],
            ["S", "T", "Y", "O", "P", "R"],
            ["O", "T", "R", "Y", "P", "S"], // O fixed
        ]
        .iter()
        .enumerate()
        {
            for (i, s) in r.iter().enumerate() {
                rows[pos][i] = s.chars().next().unwrap();
            }
        }
        assert_eq!(
            PositionTables::new(rows),
            Err(ClassicalError::BadRotorTable("blue".into()))
        );
    }
}
