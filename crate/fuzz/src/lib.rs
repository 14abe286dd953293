//! Shared round-trip checks for the fuzz targets.

use std::fmt::Display;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::Serialize;

/// Whatever parses must print back to text that parses to the same value,
/// and printing must be a fixed point.
pub fn text_round_trip<T>(data: &[u8])
where
    T: FromStr + Display + PartialEq + std::fmt::Debug,
    T::Err: std::fmt::Debug,
{
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(value) = text.parse::<T>() else { return };
    let printed = value.to_string();
    let again: T = printed.parse().expect("canonical text reparses");
    assert_eq!(again, value);
    assert_eq!(again.to_string(), printed);
}

/// Accepted JSON must survive encode then decode.
pub fn json_round_trip<T>(data: &[u8])
where
    T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug,
{
    let Ok(value) = serde_json::from_slice::<T>(data) else {
        return;
    };
    let encoded = serde_json::to_string(&value).expect("encodes");
    let again: T = serde_json::from_str(&encoded).expect("encoded JSON decodes");
    assert_eq!(again, value);
}

#[cfg(test)]
mod corpus {
    use std::fs;
    use std::path::Path;

    use twocolor::bijections::PartitionPair;
    use twocolor::families::ProfileWord;
    use twocolor::{Partition, TripleDecomposition, TwoColorPartition};

    use super::{json_round_trip, text_round_trip};

    fn seeds(target: &str) -> Vec<Vec<u8>> {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(target);
        let mut out: Vec<_> = fs::read_dir(&dir)
            .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
            .map(|e| fs::read(e.unwrap().path()).unwrap())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn replay_text_seeds() {
        seeds("parse_partition")
            .iter()
            .for_each(|d| text_round_trip::<Partition>(d));
        seeds("parse_two_color")
            .iter()
            .for_each(|d| text_round_trip::<TwoColorPartition>(d));
        seeds("parse_word")
            .iter()
            .for_each(|d| text_round_trip::<ProfileWord>(d));
        seeds("parse_triple")
            .iter()
            .for_each(|d| text_round_trip::<TripleDecomposition>(d));
        seeds("parse_pair")
            .iter()
            .for_each(|d| text_round_trip::<PartitionPair>(d));
    }

    #[test]
    fn replay_json_seeds() {
        for d in seeds("json_decode") {
            json_round_trip::<Partition>(&d);
            json_round_trip::<TwoColorPartition>(&d);
            json_round_trip::<ProfileWord>(&d);
            json_round_trip::<TripleDecomposition>(&d);
            json_round_trip::<PartitionPair>(&d);
        }
    }
}
