use proptest::prelude::*;
use ratcurves::report::{inventories_to_csv, inventory_to_json, parse_inventory_json, CSV_HEADER};
use ratcurves_core::{classify, validate_params};

proptest! {
    #[test]
    fn json_round_trips(g in 2i64..=30, k in 1i64..=120) {
        let inv = classify(validate_params(g, k).unwrap());
        let text = inventory_to_json(&inv).unwrap();
        let back = parse_inventory_json(&text).unwrap();
        prop_assert_eq!(inventory_to_json(&back).unwrap(), text);
    }

    #[test]
    fn csv_has_one_row_per_component(g in 2i64..=30, k in 1i64..=120) {
        let inv = classify(validate_params(g, k).unwrap());
        let text = inventories_to_csv([&inv]).unwrap();
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
        prop_assert_eq!(header, CSV_HEADER.to_vec());
        let rows: Vec<_> = reader.records().map(Result::unwrap).collect();
        prop_assert_eq!(rows.len(), inv.len());
        for row in rows {
            prop_assert_eq!(row.len(), CSV_HEADER.len());
            let first = g.to_string();
            prop_assert_eq!(&row[0], first.as_str());
        }
    }
}
