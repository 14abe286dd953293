#![no_main]

use libfuzzer_sys::fuzz_target;
use twocolor::bijections::PartitionPair;
use twocolor::families::ProfileWord;
use twocolor::{Partition, TripleDecomposition, TwoColorPartition};
use twocolor_fuzz::json_round_trip;

fuzz_target!(|data: &[u8]| {
    json_round_trip::<Partition>(data);
    json_round_trip::<TwoColorPartition>(data);
    json_round_trip::<ProfileWord>(data);
    json_round_trip::<TripleDecomposition>(data);
    json_round_trip::<PartitionPair>(data);
});
