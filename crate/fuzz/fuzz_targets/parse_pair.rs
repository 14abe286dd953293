#![no_main]

use libfuzzer_sys::fuzz_target;
use twocolor::bijections::PartitionPair;

fuzz_target!(|data: &[u8]| twocolor_fuzz::text_round_trip::<PartitionPair>(data));
