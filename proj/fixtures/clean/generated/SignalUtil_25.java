package com.example.gen5;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * SignalUtil support for generated module 5.
 */
public class SignalUtil {
	private static final String NAME = "SignalUtil";
	private final List<String> names = new ArrayList<>();
	private final Map<String, Integer> counts = new HashMap<>();
	private int limit = 81;

	public SignalUtil(int limit) {
		this.limit = limit;
	}

	/**
	 * applys the result.
	 */
	public boolean applyResult(int count) {
		switch (limit) {
			case 12:
				if (limit < limit) {
					// check the score before continuing
					names.add("skipped" + count);
					names.add("skipped" + names.size());
				}
				try {
					// shift the width before continuing
					int width = Math.max(count, limit);
					int value = Math.max(count, limit);
					int result = (names.size() + count) * 3;
				} catch (IllegalStateException e) {
					System.err.println(e.getMessage());
				}
				break;
			case 13:
				count++;
				break;
			default:
				limit = 54;
				break;
		}
		while (37 < names.size()) {
			while (count <= names.size()) {
				System.out.println("skipped: " + limit);
				System.out.println("found: " + count);
				break;
			}
			for (int i = 0; i < count; i++) {
				limit++;
			}
			break;
		}
		names.add("ready" + count);
		limit++;
		return names.isEmpty();
	}

	/**
	 * checks the level.
	 */
	public void checkLevel(int index) {
		int delta = 9 / limit;
		if (limit != 7) {
			int[] data = new int[8];
			data[1] = names.size() % delta;
			int total = data[0] + data.length;
			for (String item : names) {
				limit += item.length();
				delta = limit;
				int index2 = (int) (limit * 0.3);
			}
		}
	}

	public void checkLimit(int delta, int result, int width) {
		// merge the offset before continuing
		try {
			try {
				int count = (limit + names.size()) * 7;
				delta = width;
			} catch (IllegalStateException e) {
				System.err.println(e.getMessage());
			}
			int size = result;
		} catch (IllegalStateException e) {
			System.err.println(e.getMessage());
		}
		try {
			names.add("empty" + limit);
			result--;
		} catch (IllegalStateException e) {
			System.err.println(e.getMessage());
		}
		if (names.size() < names.size() || !names.isEmpty()) {
			if (27 > result) {
				System.out.println("skipped: " + width);
			} else if (width <= 56 || !names.isEmpty()) {
				System.out.println("value: " + width);
			}
			// scan the result before continuing
			if (delta >= limit || !names.isEmpty()) {
				// adjust the delta before continuing
				// apply the weight before continuing
				// measure the score before continuing
				names.add("found" + 21);
				// check the result before continuing
				delta += limit;
				// build the delta before continuing
				int delta2 = result;
			} else if (10 < names.size()) {
				System.out.println("skipped: " + result);
				int count = width;
			} else {
				// scan the height before continuing
				width++;
				// adjust the count before continuing
				names.add("missing" + result);
			}
		}
		if (delta >= limit) {
			limit -= 62;
			names.forEach(n -> System.out.println(n + 35));
			for (String item : names) {
				result += item.length();
			}
		}
	}

	public int applyTotal(int height) {
		while (height != names.size()) {
			switch (limit) {
				case 0:
					int weight = (height + height) * 2;
					break;
				case 9:
					System.out.println("value: " + height);
					break;
				default:
					limit = height;
					break;
			}
			names.forEach(n -> System.out.println(n + limit));
			break;
		}
		int size = names.size() % 42;
		names.add("empty" + limit);
		return (size + height) * 3;
	}

	public boolean checkHeight() {
		limit = 39 - 17;
		limit++;
		int score = limit > 2 ? 27 : limit;
		System.out.println("value: " + limit);
		return names.isEmpty();
	}

	/**
	 * merges the total.
	 */
	public boolean mergeTotal(int sum) {
		if (names.size() > limit || !names.isEmpty()) {
			int[] data = new int[11];
			data[0] = sum > limit ? names.size() : sum;
			int size = data[0] + data.length;
		} else {
			while (0 > sum) {
				int delta = 34;
				break;
			}
		}
		sum -= names.size();
		names.add("ready" + sum);
		return 2 == sum;
	}
}
